use dellac::bijections::{even_expand, even_reduce, odd_expand, odd_reduce};
use dellac::enumerate::{enum_dc, enum_labeled, enum_sdc, enum_te, enum_to, even_extended_count, odd_extended_count, Enumeration};
use dellac::grid::Kind;
use dellac::json::TableauDoc;
use dellac::seq::{p_poly, p_via_cf, p_via_pistols};
use dellac::stats::PathReport;
use dellac::sums::{e_poly, e_poly_seq, odd_poly, odd_poly_seq};

#[test]
fn parallel_and_sequential_sums_agree() {
    for n in 2..=5 {
        assert_eq!(e_poly(n).unwrap(), e_poly_seq(n).unwrap());
        assert_eq!(odd_poly(n).unwrap(), odd_poly_seq(n).unwrap());
    }
}

#[test]
fn split_streams_cover_the_family_once() {
    let e = Enumeration::new(Kind::EvenExtended, 5).unwrap();
    let whole: Vec<_> = e.iter().map(|t| t.rows()).collect();
    let mut parts = Vec::new();
    for p in e.split(13) {
        parts.extend(e.iter_prefix(&p).map(|t| t.rows()));
    }
    assert_eq!(whole, parts);
    assert_eq!(whole.len() as u128, even_extended_count(5));
}

#[test]
fn family_sizes() {
    assert_eq!(enum_dc(4).unwrap().count(), 38);
    assert_eq!(enum_sdc(6).unwrap().count(), 98);
    assert_eq!(enum_te(4).unwrap().count() as u128, even_extended_count(4));
    assert_eq!(enum_to(3).unwrap().count() as u128, odd_extended_count(3));
}

#[test]
fn three_routes_to_p() {
    for n in 1..=6 {
        let p = p_poly(n).unwrap();
        assert_eq!(p_via_pistols(n).unwrap(), p);
        assert_eq!(p_via_cf(n).unwrap(), p);
    }
}

#[test]
fn expansions_invert_through_json() {
    for t in enum_te(3).unwrap() {
        let doc = TableauDoc::new(Kind::EvenExtended, &t);
        let back = TableauDoc::parse(&doc.to_json()).unwrap().even().unwrap();
        assert_eq!(back, t);
        for l in enum_labeled(&t) {
            let d = even_expand(&l).unwrap();
            assert_eq!(even_reduce(&d.as_dellac()).unwrap(), l);
        }
    }
    for t in enum_to(2).unwrap() {
        for l in enum_labeled(&t) {
            let d = odd_expand(&l).unwrap();
            assert_eq!(odd_reduce(&d.as_dellac()).unwrap(), l);
        }
    }
}

#[test]
fn path_counts_add_up() {
    for t in enum_te(4).unwrap() {
        let r = PathReport::new(&t);
        assert_eq!(r.max, r.b + r.r + r.g);
        assert!(r.omax <= r.max + 2);
        assert!(r.max < 4 && r.fr >= 1 + r.max);
    }
}
