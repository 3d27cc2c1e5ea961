use std::collections::HashSet;

use gtskew::tableaux::{
    enumerate_ssyt, enumerate_tableaux, hook_diagram, is_admissible, shapes_up_to, ssyt_to_tableau, tableau_to_ssyt,
    transformation_graph, weight_of_hook, SkewShape,
};

const FAMILIES: [(usize, usize, usize); 6] = [(1, 1, 0), (1, 1, 1), (2, 1, 0), (1, 2, 0), (2, 1, 1), (2, 2, 0)];

#[test]
fn gt_count_equals_ssyt_count() {
    let mut nonempty = 0;
    for (m, n, r) in FAMILIES {
        for s in shapes_up_to(m, n, r, 6) {
            let gt = enumerate_tableaux(&s).len();
            assert_eq!(gt, enumerate_ssyt(&s).len(), "{s:?}");
            nonempty += usize::from(gt > 0);
        }
    }
    assert!(nonempty > 100);
}

#[test]
fn bijection_round_trips() {
    for (m, n, r) in FAMILIES {
        for s in shapes_up_to(m, n, r, 4) {
            let basis = enumerate_tableaux(&s);
            let images: HashSet<_> = basis
                .iter()
                .map(|t| {
                    let y = tableau_to_ssyt(&s, t).unwrap();
                    y.check_semistandard(m, n).unwrap();
                    assert_eq!(&ssyt_to_tableau(&y, &s).unwrap(), t, "{s:?}");
                    y
                })
                .collect();
            let all: HashSet<_> = enumerate_ssyt(&s).into_iter().collect();
            assert_eq!(images, all, "{s:?}");
        }
    }
}

#[test]
fn enumeration_is_canonical_and_admissible() {
    for (m, n, r) in FAMILIES {
        for s in shapes_up_to(m, n, r, 4) {
            let basis = enumerate_tableaux(&s);
            assert!(basis.iter().all(|t| is_admissible(&s, t)));
            let distinct: HashSet<_> = basis.iter().collect();
            assert_eq!(distinct.len(), basis.len());
            assert_eq!(basis, enumerate_tableaux(&s));
        }
    }
}

#[test]
fn transformation_graph_is_connected() {
    for (m, n, r) in FAMILIES {
        for s in shapes_up_to(m, n, r, 4) {
            let basis = enumerate_tableaux(&s);
            if basis.is_empty() {
                continue;
            }
            assert!(transformation_graph(&s, &basis).connected, "{s:?}");
        }
    }
}

#[test]
fn hook_diagrams_invert() {
    for (m, n) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        for s in shapes_up_to(m, n, 0, 6) {
            let d = hook_diagram(s.lambda(), m, n).unwrap();
            assert_eq!(d.size() as i64, s.lambda().iter().sum::<i64>());
            assert_eq!(weight_of_hook(&d, m, n).unwrap(), s.lambda());
        }
    }
    assert_eq!(hook_diagram(&[2, 1], 1, 1).unwrap().rows(), &[2, 1]);
    assert!(hook_diagram(&[0, 1], 1, 1).is_err());
    assert!(SkewShape::new(1, 1, 1, vec![1, 1, 0], vec![2]).is_err());
}
