use super::*;
use crate::cyclotomic::init_ring;
use crate::link::catalog::{braid_closure, catalog, lookup, reidemeister_pairs, skein_triples};
use crate::link::{zero_frame_normalize, PdCode};

fn lp(low: i64, c: &[i64]) -> LaurentPoly {
    LaurentPoly::from_ints(low, c)
}

fn entry(name: &str) -> PdCode {
    lookup(name).unwrap().diagram
}

fn mult(d: &PdCode) -> LaurentPoly {
    contract(&slice(d), 64).unwrap()
}

#[test]
fn laurent_arithmetic() {
    let d = LaurentPoly::delta();
    assert_eq!(d.to_string(), "-A^2 - A^-2");
    assert_eq!((&d * &d).to_string(), "A^4 + 2 + A^-4");
    assert_eq!(lp(-4, &[-1, 0, 0, 0, 0, 0, 0, 0, -1]).to_string(), "-A^4 - A^-4");
    assert_eq!(lp(0, &[0, 0, 3]), lp(2, &[3]));
    assert_eq!(lp(1, &[1, -1]) - lp(1, &[1, -1]), LaurentPoly::zero());
    let prod = &lp(-3, &[1, 2, -5]) * &d;
    assert_eq!(prod.div_exact(&d), Some(lp(-3, &[1, 2, -5])));
    assert_eq!(lp(0, &[1, 1]).div_exact(&d), None);
    let a = LaurentPoly::a2_plus_a_minus2();
    assert_eq!((&a.pow(3) * &lp(5, &[7])).divisibility(&a), Some(3));
    assert_eq!(LaurentPoly::zero().divisibility(&a), None);
    let r = lp(-7, &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1]);
    assert_eq!(LaurentPoly::from_record(&r.to_record()), Some(r));
}

#[test]
fn evaluation_at_a() {
    for p in [3u32, 5] {
        let ring = init_ring(p).unwrap();
        assert!(lp(8 * p as i64, &[1]).evaluate_at_a(&ring).is_one());
        let s = CycloNumber::s(&ring);
        let sinv = CycloNumber::s_pow(&ring, -1);
        assert_eq!(LaurentPoly::delta().evaluate_at_a(&ring), -(&s + &sinv));
        let hopf = lp(-4, &[-1, 0, 0, 0, 0, 0, 0, 0, -1]);
        assert_eq!(hopf.evaluate_at_a(&ring), -(&s * &s + &sinv * &sinv));
        assert!(hopf.evaluate_at_a(&ring).is_integral());
    }
}

#[test]
fn small_brackets() {
    assert_eq!(kauffman_bracket(&PdCode::unlink(1)).unwrap(), LaurentPoly::one());
    assert_eq!(kauffman_bracket(&PdCode::unlink(0)).unwrap(), LaurentPoly::one());
    assert_eq!(kauffman_bracket(&PdCode::unlink(2)).unwrap(), LaurentPoly::delta());
    assert_eq!(kauffman_bracket(&PdCode::unlink(4)).unwrap(), LaurentPoly::delta().pow(3));
    assert_eq!(kauffman_bracket(&entry("hopf")).unwrap().to_string(), "-A^4 - A^-4");
    let pos = PdCode::new(vec![[1, 1, 2, 2]], None, 0).unwrap();
    assert_eq!(kauffman_bracket(&pos).unwrap(), lp(-3, &[-1]));
    let neg = PdCode::new(vec![[1, 2, 2, 1]], None, 0).unwrap();
    assert_eq!(kauffman_bracket(&neg).unwrap(), lp(3, &[-1]));
}

#[test]
fn trefoil_and_figure8_brackets() {
    let t = entry("trefoil");
    let b = kauffman_bracket(&t).unwrap();
    // Mirror images have brackets related by A -> A^-1.
    let right = lp(-7, &[1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, -1]);
    let left = lp(-5, &[-1, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 1]);
    assert!(b == right || b == left, "{b}");
    // A positive curl carries -A^-3 here, so writhe +3 pairs with A^7 - A^3 - A^-5.
    assert_eq!(b == left, t.writhe() == 3);
    let f = kauffman_bracket(&entry("figure8")).unwrap();
    assert_eq!(f, lp(-8, &[1, 0, 0, 0, -1, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1]));
}

#[test]
fn slicing_examples() {
    assert_eq!(slice(&PdCode::unlink(1)).events(), &[Event::Cup, Event::Cap]);
    assert_eq!(slice(&PdCode::unlink(1)).widths(), &[2, 0]);
    assert_eq!(slice(&entry("hopf")).max_width(), 4);
    let t2 = cable(&zero_frame_normalize(&entry("trefoil")), &[2]).unwrap();
    let w = slice(&t2).max_width();
    assert!(w <= 8, "2-cable trefoil width {w}");
    let sliced = slice(&t2);
    assert_eq!(*sliced.widths().last().unwrap(), 0);
}

#[test]
fn width_limit_is_enforced() {
    let t2 = cable(&zero_frame_normalize(&entry("trefoil")), &[2]).unwrap();
    let err = contract(&slice(&t2), 4).unwrap_err();
    let BracketError::WidthLimit { event, width, limit } = err else { panic!("{err}") };
    assert_eq!(limit, 4);
    assert!(width > 4);
    assert_eq!(slice(&t2).widths()[event], width);
}

#[test]
fn contraction_matches_naive_oracle() {
    let mut cases: Vec<PdCode> = catalog().into_iter().map(|e| e.diagram).collect();
    for name in ["trefoil", "figure8", "hopf", "whitehead"] {
        let z = zero_frame_normalize(&entry(name));
        let m = z.num_components();
        cases.push(z.clone());
        cases.push(cable(&z, &vec![2; m]).unwrap());
    }
    let b = entry("borromean");
    cases.push(cable(&b, &[2, 1, 1]).unwrap());
    cases.push(cable(&b, &[0, 2, 1]).unwrap());
    for (_, x, y) in reidemeister_pairs() {
        cases.push(x);
        cases.push(y);
    }
    for d in cases.into_iter().filter(|d| d.num_crossings() <= 20) {
        assert_eq!(mult(&d), naive_bracket(&d).unwrap(), "{}", d.canonical_text());
    }
}

#[test]
fn reidemeister_two_and_three_invariance() {
    for (name, x, y) in reidemeister_pairs() {
        assert_eq!(mult(&x), mult(&y), "{name}");
    }
}

#[test]
fn curl_changes_bracket_by_minus_a_cubed() {
    let t = entry("trefoil");
    let z = zero_frame_normalize(&t);
    let ratio = mult(&z).div_exact(&mult(&t)).unwrap();
    // three negative curls: (-A^3)^3
    assert_eq!(ratio, lp(9, &[-1]));
}

#[test]
fn distant_union_multiplies() {
    let t = entry("trefoil");
    let f = entry("figure8");
    let u = t.disjoint_union(&f);
    let lhs = kauffman_bracket(&u).unwrap();
    let rhs = &(&LaurentPoly::delta() * &kauffman_bracket(&t).unwrap()) * &kauffman_bracket(&f).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn jones_values() {
    let engine = BracketEngine::default();
    for p in [3u32, 5] {
        let ring = init_ring(p).unwrap();
        let s = CycloNumber::s(&ring);
        let sinv = CycloNumber::s_pow(&ring, -1);
        assert!(engine.jones_v(&PdCode::unlink(1), &ring).unwrap().is_one());
        assert_eq!(engine.jones_v(&PdCode::unlink(2), &ring).unwrap(), &s + &sinv);
        let v_empty = engine.jones_v(&PdCode::unlink(0), &ring).unwrap();
        assert!((&v_empty * &(&s + &sinv)).is_one());
        // figure eight: q^-2 - q^-1 + 1 - q + q^2
        let q = |k: i64| CycloNumber::zeta_pow(&ring, 4 * k);
        let f8 = q(-2) - q(-1) + CycloNumber::one(&ring) - q(1) + q(2);
        assert_eq!(engine.jones_v(&entry("figure8"), &ring).unwrap(), f8);
        // positive trefoil: t + t^3 - t^4 at t = q^-1
        let pos = braid_closure(2, &[1, 1, 1]);
        assert_eq!(engine.jones_v(&pos, &ring).unwrap(), q(-1) + q(-3) - q(-4));
        // invariance under curls
        let t = entry("trefoil");
        assert_eq!(engine.jones_v(&t, &ring).unwrap(), engine.jones_v(&zero_frame_normalize(&t), &ring).unwrap());
    }
}

#[test]
fn skein_triples_hold() {
    let engine = BracketEngine::default();
    for p in [3u32, 5] {
        let ring = init_ring(p).unwrap();
        for t in skein_triples() {
            assert!(engine.skein_check(&t.plus, &t.minus, &t.zero, &ring).unwrap(), "{}", t.name);
            let wrong_zero = PdCode::unlink(3);
            assert!(!engine.skein_check(&t.plus, &t.minus, &wrong_zero, &ring).unwrap(), "{}", t.name);
        }
    }
}

#[test]
fn double_parallel_examples() {
    let engine = BracketEngine::default();
    let (poly, e) = engine.double_parallel_divisibility(&PdCode::unlink(1), &[], &[0]).unwrap();
    assert_eq!(poly, LaurentPoly::delta());
    assert_eq!(e, 1);
    let t = zero_frame_normalize(&entry("trefoil"));
    assert!(engine.double_parallel_divisibility(&t, &[], &[0]).unwrap().1 >= 1);
    let b = entry("borromean");
    assert!(engine.double_parallel_divisibility(&b, &[2], &[0, 1]).unwrap().1 >= 2);
    assert!(engine.double_parallel_divisibility(&b, &[], &[0, 1, 2]).unwrap().1 >= 3);
}

#[test]
fn disk_cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let d = cable(&zero_frame_normalize(&entry("trefoil")), &[2]).unwrap();
    let first = BracketEngine::new(16, Some(dir.path().to_path_buf())).bracket_mult(&d).unwrap();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let again = BracketEngine::new(16, Some(dir.path().to_path_buf())).bracket_mult(&d).unwrap();
    assert_eq!(first, again);
    // a corrupt record is ignored
    let path = files[0].as_ref().unwrap().path();
    std::fs::write(&path, "garbage").unwrap();
    let third = BracketEngine::new(16, Some(dir.path().to_path_buf())).bracket_mult(&d).unwrap();
    assert_eq!(first, third);
}
