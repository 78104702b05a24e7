//! The structural enumerations behind the solvers: connected sets with
//! bounded neighborhood, minimal deletion sets for a finite-obstruction
//! class, and (s,c)-separations / unbreakability.

use hedge::enumerate::{
    enum_connected_sets, enum_minimal_deletion_sets, find_separation, is_unbreakable,
    ConnectedSetQuery,
};
use hedge::families::{complete, cycle, path, wheel};
use hedge::oracle::ClassOracle;

fn main() {
    // all connected sets through vertex 0 of P6 with at most 2 extra
    // vertices and a neighborhood of at most 1 vertex
    let p6 = path(6);
    let q = ConnectedSetQuery { anchor: 0, size_budget: 2, nbhd_budget: 1 };
    for s in enum_connected_sets(&p6, &q) {
        println!("connected set {s} with N(S) = {}", p6.open_neighborhood(&s));
    }

    // every inclusion-minimal way to hit all triangles of the 4-wheel
    let w4 = wheel(4).unwrap();
    let triangle_free = ClassOracle::triangle_free();
    for y in enum_minimal_deletion_sets(&triangle_free, &w4, 3).unwrap() {
        println!("minimal triangle hitting set: {y}");
    }

    // a (2,1)-separation of P7: one cut vertex, both sides >= 2
    let p7 = path(7);
    match find_separation(&p7, 2, 1).unwrap() {
        Some(sep) => println!(
            "P7 separation: x={} cut={} y={}",
            sep.x_side, sep.separator, sep.y_side
        ),
        None => println!("P7 is (2,1)-unbreakable"),
    }

    // cliques never split: both sides of a separation would need an edge
    // between them
    for (name, g, s, c) in [
        ("K6", complete(6), 2, 3),
        ("C6", cycle(6).unwrap(), 2, 2),
        ("wheel(8)", wheel(8).unwrap(), 3, 2),
    ] {
        println!("{name} is ({s},{c})-unbreakable: {}", is_unbreakable(&g, s, c).unwrap());
    }
}
