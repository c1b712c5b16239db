mod common;

use meetpoint::oracle::{self, OracleError};
use meetpoint::search::{self, EventKind, Objective, SolveError, Strategy};
use proptest::prelude::*;

const STRATEGIES: [Strategy; 2] = [Strategy::Full, Strategy::Early];
const OBJECTIVES: [Objective; 2] = [Objective::Center, Objective::Centroid];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn extracted_keys_never_decrease(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 25);
        for objective in OBJECTIVES {
            for strategy in STRATEGIES {
                let Ok(r) = search::solve(&g, &s, objective, strategy, true) else { continue };
                let mut last = vec![f64::NEG_INFINITY; s.len()];
                for e in r.trace.unwrap().iter().filter(|e| e.kind == EventKind::Extract) {
                    let j = e.source.unwrap();
                    prop_assert!(e.value >= last[j]);
                    last[j] = e.value;
                }
            }
        }
    }

    #[test]
    fn early_never_explores_more(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 25);
        for objective in OBJECTIVES {
            let full = search::solve(&g, &s, objective, Strategy::Full, false);
            let early = search::solve(&g, &s, objective, Strategy::Early, false);
            if let (Ok(f), Ok(e)) = (full, early) {
                prop_assert!(e.explored <= f.explored);
                for (a, b) in e.per_source_explored.iter().zip(&f.per_source_explored) {
                    prop_assert!(a <= b);
                }
            }
        }
    }

    #[test]
    fn results_are_self_consistent(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 25);
        let dm = oracle::full_distances(&g, &s);
        for objective in OBJECTIVES {
            for strategy in STRATEGIES {
                let Ok(r) = search::solve(&g, &s, objective, strategy, false) else { continue };
                prop_assert_eq!(r.value, objective.evaluate(&r.per_source_dist));
                prop_assert_eq!(r.explored, r.per_source_explored.iter().sum::<usize>());
                prop_assert_eq!(r.explored_possible, s.len() * g.node_count());
                for j in 0..s.len() {
                    prop_assert_eq!(r.per_source_dist[j], dm.get(j, r.node));
                }
            }
        }
    }

    #[test]
    fn no_intersection_matches_oracle(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 25);
        let exact = oracle::oracle_center(&oracle::full_distances(&g, &s));
        for objective in OBJECTIVES {
            for strategy in STRATEGIES {
                let r = search::solve(&g, &s, objective, strategy, false);
                prop_assert_eq!(
                    matches!(r, Err(SolveError::NoIntersection)),
                    matches!(exact, Err(OracleError::NoIntersection))
                );
            }
        }
    }

    #[test]
    fn answers_match_oracle(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 25);
        let dm = oracle::full_distances(&g, &s);
        let Ok(center) = oracle::oracle_center(&dm) else { return Ok(()) };
        let centroid = oracle::oracle_centroid(&dm).unwrap();
        for strategy in STRATEGIES {
            let r = search::solve(&g, &s, Objective::Center, strategy, false).unwrap();
            prop_assert_eq!((r.node, r.value), (center.node, center.value));
        }
        let full = search::solve_centroid_full(&g, &s, false).unwrap();
        prop_assert_eq!((full.node, full.value), (centroid.node, centroid.value));
        let early = search::solve_centroid_early(&g, &s, false).unwrap();
        prop_assert!(early.value >= centroid.value);
    }

    #[test]
    fn traces_are_deterministic(seed in any::<u64>()) {
        let (g, s) = common::wild_instance(seed, 15);
        for objective in OBJECTIVES {
            let a = search::solve(&g, &s, objective, Strategy::Early, true);
            let b = search::solve(&g, &s, objective, Strategy::Early, true);
            prop_assert_eq!(a, b);
        }
    }
}
