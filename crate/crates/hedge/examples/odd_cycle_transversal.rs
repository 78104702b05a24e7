//! Minimum odd cycle transversals by iterative compression, and the
//! separator correspondence the compression step is built on: fixing a
//! 2-coloring on parts of the old transversal is possible exactly when a
//! vertex set separates the "must flip" terminals from the "must stay"
//! terminals.

use hedge::families::{complete, cycle, petersen, wheel};
use hedge::oct::{check_recolorable, min_oct, min_vertex_separator, separator_instance};
use hedge::oracle::bipartite_within;
use hedge::set::VertexSet;

fn main() {
    for (name, g) in [
        ("C5", cycle(5).unwrap()),
        ("K5", complete(5)),
        ("petersen", petersen()),
        ("wheel(8)", wheel(8).unwrap()),
    ] {
        let w = min_oct(&g, g.n()).unwrap();
        assert!(bipartite_within(&g, &g.vertex_set().difference(&w)).is_some());
        println!("{name:>8}: minimum transversal {w}");
    }

    // size caps turn min_oct into a decision procedure
    println!("K5 has a transversal of size <= 2: {}", min_oct(&complete(5), 2).is_some());

    // the correspondence on C5: retain vertex 0 with color 1, color the
    // remaining path 1-2-3-4 canonically
    let c5 = cycle(5).unwrap();
    let w_l1: VertexSet = [0].into();
    let empty = VertexSet::new();
    let c = bipartite_within(&c5, &[1, 2, 3, 4].into()).unwrap();
    let inst = separator_instance(&c5, &w_l1, &empty, &empty, &c).unwrap();
    println!("terminals: flip {} / keep {}", inst.a_side, inst.r_side);

    // recoloring succeeds exactly when the terminals are separated
    for x in [VertexSet::new(), [2].into(), [3].into()] {
        let ok = check_recolorable(&c5, &w_l1, &empty, &empty, &x).unwrap();
        println!("delete {x}: recolorable with 0 fixed to color 1 -> {ok}");
    }
    let cut = inst.min_separator(c5.n()).unwrap();
    println!("minimum terminal separator: {cut}");

    // the separator primitive itself; terminals are deletable too
    let k2 = complete(2);
    let cut = min_vertex_separator(&k2, &[0].into(), &[1].into(), 1).unwrap();
    println!("adjacent terminals force terminal deletion: {cut}");
}
