//! Checks the solvers against brute force on random instances.

use meetpoint::graphgen::{self, sub_seed, GenConfig};
use meetpoint::oracle;
use meetpoint::search;

fn main() {
    let n = 500;
    let mut centroid_misses = 0;
    for i in 0..n {
        let (g, s) = graphgen::generate(&GenConfig::new(40, 4, sub_seed(11, i))).unwrap();
        let dm = oracle::full_distances(&g, &s);

        let fw = oracle::allpairs_floyd_warshall(&g).unwrap();
        for (j, src) in s.iter().enumerate() {
            assert_eq!(dm.row(j), fw[src.0].as_slice());
        }

        let center = oracle::oracle_center(&dm).unwrap();
        let early = search::solve_center_early(&g, &s, false).unwrap();
        assert_eq!((early.node, early.value), (center.node, center.value));

        let centroid = oracle::oracle_centroid(&dm).unwrap();
        let guess = search::solve_centroid_early(&g, &s, false).unwrap();
        if guess.value != centroid.value {
            centroid_misses += 1;
        }
    }
    println!("{n} instances: early center always exact");
    println!("early centroid off the optimum on {centroid_misses} of {n}");
}
