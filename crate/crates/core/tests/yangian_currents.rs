use gtskew::exactmath::{Field, Rational};
use gtskew::glrep::Sign;
use gtskew::tableaux::{check_covariant, enumerate_tableaux, shapes_up_to, ContentTable, SkewShape};
use gtskew::yangian::{
    build_current_rep, check_nonvanishing, evaluation_currents, is_irreducible, is_thin, l_weight, s_minus, s_plus, script_y_weight,
    simple_l_root_ratio, verify_central_series, verify_drinfeld_relations, CurrentRep, VerifyOptions,
};

fn tested_shapes() -> Vec<SkewShape> {
    let mut v = Vec::new();
    for (m, n, r) in [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, 0), (2, 1, 1), (1, 2, 1), (2, 2, 0), (2, 0, 0), (0, 2, 0), (0, 2, 1)] {
        let max = if m + n + r >= 4 { 3 } else { 4 };
        v.extend(shapes_up_to(m, n, r, max));
    }
    // skew shapes whose module is zero are not representations to test
    v.retain(|s| !enumerate_tableaux(s).is_empty());
    v
}

fn rep(s: &SkewShape) -> CurrentRep {
    build_current_rep(s).unwrap_or_else(|e| panic!("{s:?}: {e}"))
}

#[test]
fn gauss_decomposition_oracle_matches() {
    for (m, n) in [(1, 1), (2, 1), (1, 2)] {
        for s in shapes_up_to(m, n, 0, 4) {
            let ours = rep(&s);
            let oracle = evaluation_currents(&s).unwrap_or_else(|e| panic!("{s:?}: {e}"));
            assert_eq!(ours.basis, oracle.basis);
            assert_eq!(ours.d, oracle.d, "{s:?}: d");
            assert_eq!(ours.x_plus, oracle.x_plus, "{s:?}: x+");
            assert_eq!(ours.x_minus, oracle.x_minus, "{s:?}: x-");
        }
    }
}

#[test]
fn drinfeld_relations_hold() {
    let opts = VerifyOptions::default();
    let mut shapes = tested_shapes();
    shapes.push(SkewShape::straight(1, 2, vec![2, 1, 0]).unwrap());
    for s in shapes {
        let r = verify_drinfeld_relations(&rep(&s), &opts).unwrap();
        assert!(r.passed(), "{s:?}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn central_series_is_scalar() {
    for s in tested_shapes() {
        let (r, c) = verify_central_series(&rep(&s), 6).unwrap();
        assert!(r.passed() && c.is_some(), "{s:?}: {:?}", r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn skew_modules_are_thin_and_irreducible() {
    for s in tested_shapes() {
        let rep = rep(&s);
        assert!(is_thin(&rep), "{s:?}");
        let cert = is_irreducible(&rep);
        assert!(cert.irreducible, "{s:?}: {cert:?}");
        let nv = check_nonvanishing(&rep);
        assert!(nv.passed(), "{s:?}: {:?}", nv.failures().collect::<Vec<_>>());
        assert_eq!(cert.forward_tree.len() + 1, rep.dim());
    }
}

#[test]
fn poles_are_simple_and_predicted() {
    for s in tested_shapes() {
        let rep = rep(&s);
        let gammas = gtskew::yangian::gamma_sequence(s.m(), s.n());
        for (sign, xs) in [(Sign::Plus, &rep.x_plus), (Sign::Minus, &rep.x_minus)] {
            for (idx, x) in xs.iter().enumerate() {
                let k = idx + 1;
                for (to, from, f) in x.nonzero_entries() {
                    let src = &rep.basis[from];
                    let i = (1..=s.r() + k)
                        .find(|&i| src.shifted(k, i, sign.delta()) == rep.basis[to])
                        .unwrap_or_else(|| panic!("{s:?}: entry ({to},{from}) of x_{k} is not a transformation"));
                    assert!(f.num().is_constant(), "{s:?}: {f}");
                    assert_eq!(f.den().degree(), Some(1), "{s:?}: {f}");
                    let pole = -f.den().coeff(0) / f.den().coeff(1);
                    let shift = match sign {
                        Sign::Plus => s_plus(&s, k, i),
                        Sign::Minus => s_minus(&s, k, i),
                    };
                    let l = ContentTable::new(&s, src).l(k, i);
                    let predicted = -(Rational::from_i64(l + shift) + gammas[k - 1].clone());
                    assert_eq!(pole, predicted, "{s:?} {src} k={k} i={i}");
                }
            }
        }
    }
}

#[test]
fn unique_highest_vector() {
    for s in tested_shapes() {
        let rep = rep(&s);
        let killed: Vec<usize> = (0..rep.dim())
            .filter(|&b| rep.x_plus.iter().all(|x| (0..rep.dim()).all(|a| x.get(a, b).is_zero())))
            .collect();
        assert_eq!(killed, vec![0], "{s:?}");
        let top = &rep.basis[0];
        assert_eq!(rep.l_weights()[0], l_weight(&s, top));
    }
}

#[test]
fn weight_series_are_injective() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2), (0, 2), (3, 0)] {
        let len = m + n;
        let mut seen = std::collections::HashMap::new();
        let mut beta = vec![0i64; len];
        loop {
            if check_covariant(&beta, m, n).is_ok() {
                let y = script_y_weight(&beta, m);
                if let Some(prev) = seen.insert(y, beta.clone()) {
                    panic!("gl({m}|{n}): {prev:?} and {beta:?} share a weight series");
                }
            }
            let Some(p) = (0..len).find(|&p| beta[p] < 4) else { break };
            beta[p] += 1;
            beta[..p].fill(0);
        }
        assert!(seen.len() > 1);
    }
}

#[test]
fn every_transformation_is_a_simple_root() {
    for s in tested_shapes() {
        let rep = rep(&s);
        for t in &rep.basis {
            for k in 1..s.rank() {
                for i in 1..=s.r() + k {
                    for sign in [Sign::Plus, Sign::Minus] {
                        let target = t.shifted(k, i, sign.delta());
                        if rep.basis.contains(&target) {
                            simple_l_root_ratio(&s, t, k, i, sign).unwrap_or_else(|e| panic!("{s:?} {t}: {e}"));
                        }
                    }
                }
            }
        }
    }
}
