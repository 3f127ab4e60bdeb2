//! Fixture graphs shared by the criterion benches.

use ocdom_core::generators::{cycle, path};
use ocdom_core::products::{cartesian, corona, direct_power_complete, lexicographic};
use ocdom_core::Graph;

/// `K4 × K4 × K4`, the largest instance in the reproduction scenario.
pub fn k444() -> Graph {
    direct_power_complete(&[4, 4, 4])
        .expect("64 vertices")
        .product
}

/// `P4 ∘ P4` (16 vertices).
pub fn lex_p4_p4() -> Graph {
    lexicographic(&path(4), &path(4))
        .expect("16 vertices")
        .product
}

/// `C4 □ C5` (20 vertices).
pub fn grid_c4_c5() -> Graph {
    let c4 = cycle(4).expect("n >= 3");
    let c5 = cycle(5).expect("n >= 3");
    cartesian(&c4, &c5).expect("20 vertices").product
}

/// `K3 ∘c P4` (15 vertices).
pub fn corona_k3_p4() -> Graph {
    corona(&ocdom_core::generators::complete(3), &path(4))
        .expect("15 vertices")
        .product
}
