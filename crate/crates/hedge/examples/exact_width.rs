//! Exact treewidth and treedepth on small graphs, with the certifying
//! decompositions validated against their defining properties.

use hedge::families::{complete, cycle, grid, path, petersen};
use hedge::width::{treedepth_exact, treewidth_exact, treewidth_atmost};

fn main() {
    for (name, g) in [
        ("P7", path(7)),
        ("C6", cycle(6).unwrap()),
        ("K5", complete(5)),
        ("3x4 grid", grid(3, 4).unwrap()),
        ("petersen", petersen()),
    ] {
        let (tw, decomposition) = treewidth_exact(&g).unwrap();
        decomposition.validate(&g).unwrap();
        let (td, forest) = treedepth_exact(&g).unwrap();
        forest.validate(&g).unwrap();
        println!("{name:>8}: tw={tw} td={td} bags={}", decomposition.bags.len());
        // treedepth dominates treewidth by one on every graph
        assert!(tw <= td as i32 - 1);
    }

    // decision-only queries stop as soon as the bound is settled
    println!("tw(petersen) <= 3: {}", treewidth_atmost(&petersen(), 3).unwrap());
    println!("tw(petersen) <= 4: {}", treewidth_atmost(&petersen(), 4).unwrap());

    // the decompositions serialize for external consumers
    let (_, decomposition) = treewidth_exact(&cycle(5).unwrap()).unwrap();
    println!("C5 decomposition: {}", decomposition.to_json());
    let (_, forest) = treedepth_exact(&path(3)).unwrap();
    println!("P3 elimination forest: {}", forest.to_json());
}
