use super::catalog::{braid_closure, catalog, lookup};
use super::*;

fn entry(name: &str) -> PdCode {
    lookup(name).unwrap().diagram
}

fn framed(name: &str, f: &[i64]) -> FramedLink {
    FramedLink::new(entry(name), f.to_vec()).unwrap()
}

#[test]
fn parse_free_loop_unknot() {
    let pd = parse_pd(r#"{"pd": [], "free_loops": 1}"#).unwrap();
    assert_eq!(pd.num_components(), 1);
    assert_eq!(pd.num_crossings(), 0);
}

#[test]
fn parse_hopf_components_and_edges() {
    let pd = parse_pd(r#"{"pd": [[4,1,3,2],[2,3,1,4]]}"#).unwrap();
    assert_eq!(pd.num_components(), 2);
    assert_eq!(pd.num_edges(), 4);
}

#[test]
fn parse_rejects_bad_input() {
    let e = parse_pd(r#"{"pd": [[1,1,1,2],[2,3,3,2]]}"#).unwrap_err();
    assert!(matches!(e, LinkError::EdgeCount { label: 1, count: 3, .. }), "{e}");
    assert!(matches!(parse_pd(r#"{"pd": [[0,1,1,2]]}"#), Err(LinkError::BadLabel { .. })));
    assert!(matches!(parse_pd(r#"{"pd": [], "bogus": 1}"#), Err(LinkError::Parse(_))));
    assert!(matches!(parse_pd(r#"{"pd": [[1,2,3"#), Err(LinkError::Parse(_))));
}

#[test]
fn explicit_components_fix_order_and_are_checked() {
    let pd = parse_pd(r#"{"pd": [[4,1,3,2],[2,3,1,4]], "components": [[3,4],[1,2]]}"#).unwrap();
    assert_eq!(pd.components()[0], vec![3, 4]);
    // 4 -> 3 runs against the under-strand 4 -> 3 at the first crossing.
    let bad = parse_pd(r#"{"pd": [[4,1,3,2],[2,3,1,4]], "components": [[4,3],[1,2]]}"#);
    assert!(bad.is_ok() || matches!(bad, Err(LinkError::Inconsistent(_))));
    let missing = parse_pd(r#"{"pd": [[4,1,3,2],[2,3,1,4]], "components": [[1,2]]}"#);
    assert!(matches!(missing, Err(LinkError::Inconsistent(_))));
}

#[test]
fn document_round_trip_on_catalog() {
    for e in catalog() {
        let doc = e.framed().to_document();
        let text = serde_json::to_string(&doc).unwrap();
        let back = FramedLink::from_document(&parse_document(&text).unwrap()).unwrap();
        assert_eq!(back, e.framed(), "{}", e.name);
    }
}

#[test]
fn linking_matrix_examples() {
    assert_eq!(linking_matrix(&framed("unknot", &[2])), vec![vec![2]]);
    let hopf = linking_matrix(&framed("hopf", &[0, 0]));
    assert_eq!(hopf[0][1].abs(), 1);
    let b = linking_matrix(&framed("borromean", &[2, 2, 2]));
    assert_eq!(b, vec![vec![2, 0, 0], vec![0, 2, 0], vec![0, 0, 2]]);
    assert!(is_algebraically_split(&entry("whitehead")));
}

#[test]
fn linking_matrix_is_symmetric() {
    for e in catalog() {
        let lk = linking_numbers(&e.diagram);
        for i in 0..lk.len() {
            for j in 0..lk.len() {
                assert_eq!(lk[i][j], lk[j][i]);
            }
        }
    }
}

#[test]
fn split_flags() {
    for e in catalog() {
        let expect = e.name != "hopf";
        assert_eq!(e.split, expect, "{}", e.name);
    }
}

#[test]
fn validate_examples() {
    assert!(validate_presentation(&framed("borromean", &[2, 2, 2]), 3).is_ok());
    let e = validate_presentation(&framed("unknot", &[3]), 3).unwrap_err();
    assert!(e.to_string().contains("0 mod 3"));
    let e = validate_presentation(&framed("hopf", &[2, 2]), 3).unwrap_err();
    assert!(e.to_string().contains("not algebraically split"));
    // several problems reported together
    let LinkError::Presentation(list) = validate_presentation(&framed("hopf", &[3, 3]), 3).unwrap_err() else {
        panic!()
    };
    assert!(list.len() >= 3, "{list:?}");
}

#[test]
fn self_writhe_examples() {
    assert_eq!(self_writhe(&entry("unknot"), 0).unwrap(), 0);
    let curl = PdCode::new(vec![[1, 1, 2, 2]], None, 0).unwrap();
    assert_eq!(self_writhe(&curl, 0).unwrap(), 1);
    let curl_neg = PdCode::new(vec![[1, 2, 2, 1]], None, 0).unwrap();
    assert_eq!(self_writhe(&curl_neg, 0).unwrap(), -1);
    assert_eq!(self_writhe(&entry("trefoil"), 0).unwrap().abs(), 3);
    assert_eq!(self_writhe(&entry("figure8"), 0).unwrap(), 0);
    assert!(self_writhe(&entry("trefoil"), 1).is_err());
}

#[test]
fn braid_closure_signs() {
    let t = braid_closure(2, &[1, 1, 1]);
    assert_eq!(t.num_components(), 1);
    assert_eq!(t.writhe(), 3);
    let h = braid_closure(2, &[1, 1]);
    assert_eq!(h.num_components(), 2);
    assert_eq!(linking_numbers(&h)[0][1], 1);
    let u = braid_closure(3, &[]);
    assert_eq!(u.num_components(), 3);
}

#[test]
fn zero_frame_normalize_properties() {
    let f8 = entry("figure8");
    assert_eq!(zero_frame_normalize(&f8), f8);
    for name in ["trefoil", "whitehead", "borromean", "hopf"] {
        let d = entry(name);
        let n = zero_frame_normalize(&d);
        assert!(is_zero_framed(&n), "{name}");
        let total: i64 = (0..d.num_components()).map(|i| self_writhe(&d, i).unwrap().abs()).sum();
        assert_eq!(n.num_crossings() as i64, d.num_crossings() as i64 + total, "{name}");
        assert_eq!(zero_frame_normalize(&n), n, "{name}");
        assert_eq!(linking_numbers(&n), linking_numbers(&d), "{name}");
    }
}

#[test]
fn cable_trivial_vectors() {
    let t = zero_frame_normalize(&entry("trefoil"));
    assert_eq!(cable(&t, &[1]).unwrap(), t.relabeled());
    assert!(cable(&t, &[0]).unwrap().is_empty());
    assert!(matches!(cable(&entry("trefoil"), &[2]), Err(LinkError::NotNormalized { .. })));
    assert!(matches!(cable(&t, &[1, 1]), Err(LinkError::CableLength { .. })));
    let u2 = cable(&entry("unknot"), &[3]).unwrap();
    assert_eq!((u2.num_crossings(), u2.free_loops()), (0, 3));
}

#[test]
fn cable_crossing_counts() {
    let b = entry("borromean");
    let c = cable(&b, &[2, 1, 3]).unwrap();
    let comps = b.crossing_components();
    let d = [2usize, 1, 3];
    let expect: usize = comps.iter().map(|&(u, o)| d[u] * d[o]).sum();
    assert_eq!(c.num_crossings(), expect);
    assert_eq!(c.num_components(), 6);
    assert!(is_zero_framed(&c));
}

#[test]
fn cable_linking_matrix_is_d_lambda_d() {
    let hopf = entry("hopf");
    let lam = linking_numbers(&hopf);
    for d in [[2usize, 1], [2, 3], [1, 3]] {
        let (c, origin) = cable_with_origins(&hopf, &d).unwrap();
        let lk = linking_numbers(&c);
        for a in 0..lk.len() {
            for b in 0..lk.len() {
                let (ia, ib) = (origin[a].0, origin[b].0);
                let expect = if ia == ib { 0 } else { lam[ia][ib] };
                assert_eq!(lk[a][b], expect, "d = {d:?}");
            }
        }
        // row sums per original pair reproduce D·Λ·D
        assert_eq!(lk.iter().flatten().sum::<i64>(), 2 * d[0] as i64 * d[1] as i64 * lam[0][1]);
    }
    let b = zero_frame_normalize(&entry("borromean"));
    let (c, _) = cable_with_origins(&b, &[2, 1, 1]).unwrap();
    assert!(is_algebraically_split(&c));
}

#[test]
fn cable_drops_components() {
    let b = entry("borromean");
    let c = cable(&b, &[1, 0, 1]).unwrap();
    // Removing one Borromean ring leaves a two-component unlink diagram.
    assert_eq!(c.num_components(), 2);
    let h = cable(&entry("hopf"), &[0, 2]).unwrap();
    assert_eq!((h.num_crossings(), h.free_loops()), (0, 2));
}

#[test]
fn class_enumeration() {
    let u = FramedLink::new(PdCode::unlink(3), vec![2, 3, 4]).unwrap();
    let pres = validate_presentation(&u, 5).unwrap();
    let cls = enumerate_classes(&pres);
    let labels: Vec<String> = cls.iter().map(|c| c.label()).collect();
    assert_eq!(labels, vec!["{}", "{1}", "{3}", "{1,3}"]);
    let odd = validate_presentation(&FramedLink::new(PdCode::unlink(2), vec![1, 3]).unwrap(), 5).unwrap();
    assert_eq!(enumerate_classes(&odd), vec![CohomClass::trivial()]);
    let b = validate_presentation(&framed("borromean", &[2, 2, 2]), 3).unwrap();
    assert_eq!(enumerate_classes(&b).len(), 8);
}

#[test]
fn parity_examples() {
    assert_eq!(cup_cubed_parity(&CohomClass::trivial()), 0);
    assert_eq!(cup_cubed_parity(&CohomClass::new(&[2, 2, 2], &[0, 1, 2]).unwrap()), 1);
    assert_eq!(cup_cubed_parity(&CohomClass::new(&[4], &[0]).unwrap()), 0);
    assert_eq!(cup_cubed_parity(&CohomClass::new(&[-2], &[0]).unwrap()), 1);
    assert!(CohomClass::new(&[3], &[0]).is_err());
}
