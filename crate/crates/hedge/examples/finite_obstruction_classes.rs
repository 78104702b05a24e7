//! Hereditary classes given by finitely many forbidden induced
//! subgraphs: the bundled presets, custom obstruction lists, membership
//! checks with embedded obstruction certificates, and the solver entry
//! point for such classes.

use hedge::families::{complete, cycle, petersen, star, wheel};
use hedge::graph::Graph;
use hedge::oracle::ClassOracle;
use hedge::witness::{solve_finite_obstruction, Kind};

fn main() {
    let g = wheel(5).unwrap();
    for oracle in [
        ClassOracle::triangle_free(),
        ClassOracle::claw_free(),
        ClassOracle::split(),
        ClassOracle::cograph(),
        ClassOracle::max_degree(3).unwrap(),
    ] {
        println!("wheel(5) in {}: {}", oracle.name(), oracle.in_class(&g));
    }

    // a failed membership check names the obstruction and where it embeds
    let claw_free = ClassOracle::claw_free();
    if let Some(emb) = claw_free.find_forbidden_induced(&star(3)).unwrap() {
        println!("K13 contains obstruction #{} at {:?}", emb.obstruction, emb.vertices);
    }
    println!("C6 claw-free: {}", claw_free.in_class(&cycle(6).unwrap()));

    // custom class: graphs with no induced path on four vertices and no
    // triangle (forbid P4 and K3)
    let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let custom = ClassOracle::from_obstructions("p4-and-triangle-free", vec![p4, complete(3)])
        .unwrap();
    println!("C5 in custom class: {}", custom.in_class(&cycle(5).unwrap()));
    println!("petersen in custom class: {}", custom.in_class(&petersen()));

    // elimination distance to triangle-free: K4 needs two rounds
    let tf = ClassOracle::triangle_free();
    for k in [1, 2] {
        let res = solve_finite_obstruction(&complete(4), k, 2, Kind::Ed, &tf).unwrap();
        match res.witness {
            Some(w) => println!("K4 to triangle-free, k={k}: yes, X={}", w.x),
            None => println!("K4 to triangle-free, k={k}: no"),
        }
    }

    // the structured branch also runs for finite classes: hitting all
    // triangles of the 8-wheel means deleting the hub
    let res = solve_finite_obstruction(&wheel(8).unwrap(), 1, 1, Kind::Ed, &tf).unwrap();
    let w = res.witness.unwrap();
    println!("wheel(8) to triangle-free, k=1, s=1: X={} [{:?}]", w.x, res.branch);
}
