/// Uniform interior grid for a Dirichlet problem on (y_min, y_max).
///
/// When an endpoint hosts a repulsive singularity (csc^2/sec^2/tan^2 walls or
/// a 1/y^2 barrier), the Dirichlet condition is imposed at an offset
/// `delta = 2 h` inside that endpoint; the offset shrinks with the grid
/// spacing inside [`super::refine`].
#[derive(Clone, Debug)]
pub struct Grid {
    pub y_min: f64,
    pub y_max: f64,
    /// Number of interior points carrying unknowns.
    pub n_points: usize,
    pub spacing: f64,
    /// Interior sample points (length `n_points`).
    pub y_values: Vec<f64>,
    /// Endpoint offsets actually applied on each side.
    pub offset: (f64, f64),
}

impl Grid {
    /// Build a grid with `n_points >= 64` interior points; `singular` flags
    /// choose the delta = 2h offset per side.
    pub fn new(y_min: f64, y_max: f64, n_points: usize, singular: (bool, bool)) -> Self {
        assert!(n_points >= 64, "need at least 64 interior points");
        assert!(y_max > y_min);
        // Solve h from the wall positions: the Dirichlet walls sit at
        // y_min + delta_l and y_max - delta_r with delta = 2h on singular
        // sides and 0 otherwise, and (n_points + 1) h spans the wall gap.
        let extra = 2.0 * (singular.0 as u8 as f64) + 2.0 * (singular.1 as u8 as f64);
        let h = (y_max - y_min) / (n_points as f64 + 1.0 + extra);
        let delta_l = if singular.0 { 2.0 * h } else { 0.0 };
        let delta_r = if singular.1 { 2.0 * h } else { 0.0 };
        let left_wall = y_min + delta_l;
        let y_values = (1..=n_points)
            .map(|i| left_wall + i as f64 * h)
            .collect();
        Self {
            y_min,
            y_max,
            n_points,
            spacing: h,
            y_values,
            offset: (delta_l, delta_r),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regular_grid_touches_endpoints() {
        let g = Grid::new(0.0, 1.0, 99, (false, false));
        assert!((g.spacing - 0.01).abs() < 1e-15);
        assert!((g.y_values[0] - 0.01).abs() < 1e-12);
        assert!((g.y_values[98] - 0.99).abs() < 1e-12);
    }

    #[test]
    fn singular_side_gets_two_h_offset() {
        let g = Grid::new(0.0, 1.0, 200, (true, false));
        assert!((g.offset.0 - 2.0 * g.spacing).abs() < 1e-15);
        assert_eq!(g.offset.1, 0.0);
        assert!((g.y_values[0] - (g.offset.0 + g.spacing)).abs() < 1e-12);
    }

    #[test]
    fn spacing_is_uniform() {
        let g = Grid::new(-2.0, 3.0, 128, (true, true));
        for w in g.y_values.windows(2) {
            assert!((w[1] - w[0] - g.spacing).abs() < 1e-12);
        }
    }
}
