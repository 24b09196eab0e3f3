//! Published values the tables are compared against.

/// Harmonic rows: `(m, a′, a″, argmax|f|, τ′, τ″)`.
pub const HARMONIC: [(usize, f64, f64, f64, f64, f64); 10] = [
    (10, 3.371, 3.535, 3.678, 0.307, 0.143),
    (20, 4.711, 4.822, 4.831, 0.120, 0.009),
    (30, 5.746, 5.835, 5.839, 0.093, 0.004),
    (40, 6.621, 6.698, 6.700, 0.079, 0.002),
    (50, 7.393, 7.462, 7.464, 0.071, 0.002),
    (60, 8.092, 8.155, 8.156, 0.064, 0.001),
    (70, 8.736, 8.793, 8.794, 0.058, 0.001),
    (80, 9.335, 9.389, 9.389, 0.054, 0.0),
    (90, 9.897, 9.948, 9.949, 0.052, 0.001),
    (100, 10.430, 10.478, 10.479, 0.049, 0.001),
];

/// Wide bump (`b = 100`) rows: `(m, a″, argmax|f|, τ″)`.
pub const WIDE_BUMP: [(usize, f64, f64, f64); 10] = [
    (10, 3.537, 3.682, 0.145),
    (20, 4.826, 4.836, 0.010),
    (30, 5.842, 5.850, 0.008),
    (40, 6.708, 6.713, 0.005),
    (50, 7.475, 7.479, 0.004),
    (60, 8.172, 8.175, 0.003),
    (70, 8.815, 8.817, 0.002),
    (80, 9.414, 9.415, 0.001),
    (90, 9.982, 9.983, 0.001),
    (100, 10.519, 10.520, 0.001),
];

/// Double-well eigenvalues `(m, Re λ, Im λ)`.
pub const DOUBLE_WELL_EIGENVALUES: [(usize, f64, f64); 27] = [
    (0, 4.4063, 0.0),
    (2, 7.3902, 0.0),
    (4, 10.3846, 0.0),
    (6, 13.3718, 0.0),
    (8, 16.3358, 0.0),
    (10, 19.2609, 0.0),
    (12, 22.1312, 0.0),
    (14, 24.9295, 0.0),
    (16, 27.6357, 0.0),
    (18, 30.2243, 0.0),
    (20, 32.6595, 0.0),
    (22, 34.8766, -0.0005),
    (24, 36.6986, -0.0736),
    (26, 38.1852, -0.6680),
    (28, 39.8085, -1.6721),
    (30, 41.5232, -2.8670),
    (32, 43.2907, -4.2188),
    (34, 45.0959, -5.7093),
    (36, 46.9295, -7.3270),
    (38, 48.7860, -9.0639),
    (40, 50.6604, -10.9142),
    (42, 52.5485, -12.8733),
    (44, 54.4504, -14.9375),
    (46, 56.3613, -17.1037),
    (48, 58.2803, -19.3695),
    (50, 60.2058, -21.7326),
    (52, 62.1367, -24.1910),
];

/// Center-equation roots `(m, root, a, η)` for the bump (`b = 10`), roots
/// numbered from 1 in order of increasing `a`.
pub const BUMP_CENTERS: [(usize, usize, f64, f64); 26] = [
    (20, 1, 5.0880, 3.9262),
    (26, 1, 5.4023, 4.3319),
    (28, 1, 5.2223, 4.5915),
    (28, 2, 10.7554, -0.3678),
    (30, 1, 5.0489, 4.8785),
    (30, 2, 10.9252, -1.3639),
    (32, 1, 4.7845, 5.1944),
    (32, 2, 11.1804, -1.9060),
    (34, 1, 4.5351, 5.5016),
    (34, 2, 11.4189, -2.3884),
    (36, 1, 4.2522, 5.8023),
    (36, 2, 11.6864, -2.8042),
    (38, 1, 3.9280, 6.0983),
    (38, 2, 11.9881, -3.1856),
    (40, 1, 3.5726, 6.3897),
    (40, 2, 12.3112, -3.5569),
    (42, 1, 3.2224, 6.6574),
    (42, 2, 12.6198, -3.9050),
    (44, 1, 2.7926, 6.9310),
    (44, 2, 12.9812, -4.2601),
    (46, 1, 2.2971, 7.1949),
    (46, 2, 13.3664, -4.6127),
    (48, 1, 1.6747, 7.4508),
    (48, 2, 13.7846, -4.9684),
    (50, 1, 0.6079, 7.7002),
    (50, 2, 14.2496, -5.3334),
];

/// Center-equation roots `(m, root, a, η)` for the double well.
pub const DOUBLE_WELL_CENTERS: [(usize, usize, f64, f64); 27] = [
    (20, 1, 5.4144, 3.8701),
    (26, 1, 5.8455, 4.2843),
    (28, 1, 5.7562, 4.5455),
    (30, 1, 5.6270, 4.8273),
    (30, 2, 10.7532, -0.1320),
    (32, 1, 5.4631, 5.1183),
    (32, 2, 10.8609, -1.4247),
    (34, 1, 5.2676, 5.4124),
    (34, 2, 10.9854, -2.0364),
    (36, 1, 5.0413, 5.7065),
    (36, 2, 11.1241, -2.5247),
    (38, 1, 4.7833, 5.9985),
    (38, 2, 11.2750, -2.9532),
    (40, 1, 4.4905, 6.2876),
    (40, 2, 11.4371, -3.3463),
    (42, 1, 4.1567, 6.5730),
    (42, 2, 11.6097, -3.7166),
    (44, 1, 3.7719, 6.8549),
    (44, 2, 11.7924, -4.0723),
    (46, 1, 3.3172, 7.1332),
    (46, 2, 11.9855, -4.4182),
    (48, 1, 2.7555, 7.4085),
    (48, 2, 12.1898, -4.7583),
    (50, 1, 1.9911, 7.6815),
    (50, 2, 12.4065, -5.0958),
    (52, 1, 0.2650, 7.9532),
    (52, 2, 12.6375, -5.4334),
];

/// `|c₂/c₁|` rows `(m, bump, double well)`.
pub const COEFFICIENT_RATIOS: [(usize, Option<f64>, Option<f64>); 13] = [
    (28, Some(0.0447), None),
    (30, Some(0.0928), Some(0.0328)),
    (32, Some(0.2083), Some(0.0621)),
    (34, Some(0.7876), Some(0.1420)),
    (36, Some(2.9866), Some(0.3890)),
    (38, Some(13.4820), Some(1.1897)),
    (40, Some(65.6680), Some(3.9086)),
    (42, Some(277.2584), Some(13.5057)),
    (44, Some(1434.62), Some(48.2824)),
    (46, Some(7615.34), Some(177.1347)),
    (48, Some(41623.37), Some(660.8588)),
    (50, Some(354757.06), Some(2486.87)),
    (52, None, Some(10590.02)),
];

/// Minimal `Δ` rows `(m, bump, double well)`.
pub const MINIMAL_DELTA: [(usize, Option<f64>, Option<f64>); 22] = [
    (10, Some(0.132627), Some(0.153114)),
    (12, Some(0.042214), Some(0.048187)),
    (14, Some(0.029275), Some(0.032804)),
    (16, Some(0.021119), Some(0.024966)),
    (18, Some(0.015969), Some(0.019302)),
    (20, Some(0.012366), Some(0.011576)),
    (22, Some(0.011045), Some(0.009765)),
    (24, Some(0.010724), Some(0.009110)),
    (26, Some(0.014866), Some(0.008487)),
    (28, Some(0.015133), Some(0.009798)),
    (30, Some(0.015232), Some(0.012214)),
    (32, Some(0.015264), Some(0.015016)),
    (34, Some(0.017776), Some(0.015332)),
    (36, Some(0.014177), Some(0.020596)),
    (38, Some(0.009434), Some(0.025885)),
    (40, Some(0.006557), Some(0.025631)),
    (42, Some(0.004796), Some(0.012372)),
    (44, Some(0.003873), Some(0.007280)),
    (46, Some(0.002828), Some(0.005568)),
    (48, Some(0.002236), Some(0.004359)),
    (50, Some(0.001732), Some(0.003464)),
    (52, None, Some(0.003133)),
];

/// Published roots `(a, η)` of the center equation at index `m`, ordered by
/// `a`.
pub fn centers(double_well: bool, m: usize) -> Vec<(f64, f64)> {
    let pick = |rows: &[(usize, usize, f64, f64)]| -> Vec<(f64, f64)> {
        rows.iter()
            .filter(|r| r.0 == m)
            .map(|r| (r.2, r.3))
            .collect()
    };
    if double_well {
        pick(&DOUBLE_WELL_CENTERS)
    } else {
        pick(&BUMP_CENTERS)
    }
}

/// Indices with published center roots.
pub fn center_indices(double_well: bool) -> Vec<usize> {
    let rows = if double_well {
        &DOUBLE_WELL_CENTERS[..]
    } else {
        &BUMP_CENTERS[..]
    };
    let mut ms: Vec<usize> = rows.iter().map(|r| r.0).collect();
    ms.dedup();
    ms
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn taus_are_differences() {
        for (_, a1, a2, peak, t1, t2) in HARMONIC {
            assert!((peak - a1 - t1).abs() < 1.5e-3);
            assert!((peak - a2 - t2).abs() < 1.5e-3);
        }
        for (_, a2, peak, t2) in WIDE_BUMP {
            assert!((peak - a2 - t2).abs() < 1.5e-3);
        }
    }

    #[test]
    fn second_roots_have_negative_eta() {
        for rows in [&BUMP_CENTERS[..], &DOUBLE_WELL_CENTERS[..]] {
            for &(_, root, _, eta) in rows {
                assert_eq!(root == 2, eta < 0.0);
            }
        }
    }

    #[test]
    fn lookups() {
        assert_eq!(centers(false, 28).len(), 2);
        assert_eq!(centers(true, 28).len(), 1);
        assert_eq!(
            centers(false, 50),
            vec![(0.6079, 7.7002), (14.2496, -5.3334)]
        );
        assert_eq!(center_indices(true).first(), Some(&20));
        assert_eq!(center_indices(false).last(), Some(&50));
    }
}
