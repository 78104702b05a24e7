//! Parse graphs from graph6 and DIMACS text, then poke at the core
//! graph operations: components, neighborhoods, induced subgraphs, and
//! the torso construction that drives the witness machinery.

use hedge::graph::Graph;
use hedge::set::VertexSet;

fn main() {
    // Petersen graph in graph6; the format packs the upper triangle of
    // the adjacency matrix into printable ASCII.
    let petersen = Graph::parse_graph6("IsP@PGXD_").unwrap();
    println!("petersen: n={} m={}", petersen.n(), petersen.edges().len());
    println!("round-trip: {}", petersen.to_graph6().unwrap());

    let dimacs = "\
c complete bipartite K23
p edge 5 6
e 1 4
e 1 5
e 2 4
e 2 5
e 3 4
e 3 5
";
    let k23 = Graph::parse_dimacs(dimacs).unwrap();
    println!("k23 from DIMACS: n={} m={}", k23.n(), k23.edges().len());

    // components are listed by ascending minimum vertex
    let scattered = Graph::from_edges(6, [(0, 5), (2, 4)]).unwrap();
    for comp in scattered.components_within(&scattered.vertex_set()) {
        println!("component: {comp}");
    }

    // the torso of X keeps X, and for every outside component clamps a
    // clique onto its neighborhood inside X
    let wheelish = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 2)])
        .unwrap();
    let x: VertexSet = [0, 1, 2].into();
    let (torso, ids) = wheelish.torso(&x);
    println!("torso of {x}: ids={ids:?} edges={:?}", torso.edges());

    let nbhd = wheelish.open_neighborhood(&[5].into());
    println!("N({{5}}) = {nbhd}");
}
