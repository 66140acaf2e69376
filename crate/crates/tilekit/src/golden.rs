//! Small hand-checked configurations used as regression fixtures by the
//! tests, the acceptance suite, and the CLI examples.

use crate::aztec::{Domino, KTiling, Tiling};

fn h(x: i32, y: i32) -> Domino {
    Domino::horizontal(x, y)
}

fn v(x: i32, y: i32) -> Domino {
    Domino::vertical(x, y)
}

/// A rank-3 3-tiling whose colors interact 4 (colors 1–2), 3 (colors 1–3)
/// and 4 (colors 2–3) times in the purple-gray model.
///
/// Its first layer has purple-gray weight `x₁²x₂x₃y₂²y₃²` and white-pink
/// weight `x₁x₂y₁y₃`.
pub fn rank3_three_coloring() -> KTiling {
    let layers = vec![
        vec![v(-3, -1), v(-2, -2), v(-2, 0), h(-1, -3), h(-1, -2), h(-1, -1), v(-1, 0), h(-1, 2), v(0, 0), v(1, -2), v(1, 0), v(2, -1)],
        vec![v(-3, -1), v(-2, -2), h(-2, 0), h(-2, 1), v(-1, -3), h(-1, -1), h(-1, 2), v(0, -3), h(0, 0), h(0, 1), v(1, -2), v(2, -1)],
        vec![h(-3, -1), h(-3, 0), h(-2, -2), h(-2, 1), h(-1, -3), v(-1, -1), h(-1, 2), h(0, -2), v(0, -1), h(0, 1), v(1, -1), v(2, -1)],
    ];
    KTiling::new(layers.into_iter().map(|ds| Tiling::new(3, ds).expect("fixture is a tiling")).collect())
        .expect("fixture layers share a rank")
}

/// The first layer of [`rank3_three_coloring`].
pub fn rank3_tiling() -> Tiling {
    rank3_three_coloring().layer(1).clone()
}
