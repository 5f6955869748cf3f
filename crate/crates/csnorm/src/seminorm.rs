//! Seminorms presented as non-negative integer coefficient vectors over a
//! fixed ordered list of boundary slopes.
//!
//! A coefficient vector `(a_1, ..., a_m)` over a [`SlopeSystem`] with slopes
//! `beta_1, ..., beta_m` defines the seminorm
//!
//! ```text
//! ||gamma|| = 2 * sum_j a_j * Delta(gamma, beta_j)
//! ```
//!
//! on the peripheral lattice. With at least two active slopes this is a norm
//! (a norm curve); with exactly one active slope it vanishes on the multiples
//! of that slope (an r-curve).

use serde::Serialize;
use thiserror::Error;

use crate::peripheral::{PeripheralClass, Slope};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeminormError {
    #[error("slope system must contain at least one slope")]
    EmptySystem,
    #[error("duplicate boundary slope {0}")]
    DuplicateSlope(Slope),
    #[error("coefficient vector has length {got}, slope system has {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("coefficient {value} at index {index} is negative")]
    NegativeCoefficient { index: usize, value: i64 },
    #[error("all coefficients are zero: the zero vector defines no curve")]
    AllZeroCoefficients,
}

/// An ordered list of pairwise distinct boundary slopes. The order is fixed
/// at construction; coefficient vectors refer to slopes by position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlopeSystem {
    slopes: Vec<Slope>,
}

impl SlopeSystem {
    pub fn new(slopes: Vec<Slope>) -> Result<SlopeSystem, SeminormError> {
        if slopes.is_empty() {
            return Err(SeminormError::EmptySystem);
        }
        for (i, s) in slopes.iter().enumerate() {
            if slopes[..i].contains(s) {
                return Err(SeminormError::DuplicateSlope(*s));
            }
        }
        Ok(SlopeSystem { slopes })
    }

    pub fn slopes(&self) -> &[Slope] {
        &self.slopes
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub(crate) fn check_coeffs(&self, coeffs: &[i64]) -> Result<(), SeminormError> {
        if coeffs.len() != self.slopes.len() {
            return Err(SeminormError::LengthMismatch {
                expected: self.slopes.len(),
                got: coeffs.len(),
            });
        }
        for (index, &value) in coeffs.iter().enumerate() {
            if value < 0 {
                return Err(SeminormError::NegativeCoefficient { index, value });
            }
        }
        Ok(())
    }

    /// Indices of the slopes with positive coefficient.
    pub(crate) fn active_indices(&self, coeffs: &[i64]) -> Vec<usize> {
        (0..coeffs.len()).filter(|&j| coeffs[j] > 0).collect()
    }
}

/// `||gamma|| = 2 sum_j coeffs[j] * Delta(gamma, beta_j)`.
pub fn evaluate(
    sys: &SlopeSystem,
    coeffs: &[i64],
    gamma: PeripheralClass,
) -> Result<i64, SeminormError> {
    sys.check_coeffs(coeffs)?;
    Ok(eval_unchecked(sys, coeffs, gamma))
}

pub(crate) fn eval_unchecked(sys: &SlopeSystem, coeffs: &[i64], gamma: PeripheralClass) -> i64 {
    let mut total: i128 = 0;
    for (slope, &a) in sys.slopes.iter().zip(coeffs) {
        total += 2 * a as i128 * gamma.distance(slope) as i128;
    }
    total.try_into().expect("seminorm value overflows i64")
}

/// The minimal positive value `s` of the seminorm over nonzero peripheral
/// classes. This is always an even positive integer.
pub fn minimal_positive_norm(sys: &SlopeSystem, coeffs: &[i64]) -> Result<i64, SeminormError> {
    sys.check_coeffs(coeffs)?;
    let active = sys.active_indices(coeffs);
    if active.is_empty() {
        return Err(SeminormError::AllZeroCoefficients);
    }

    // One active slope c/d: the seminorm is 2a|dx - cy|, and since
    // gcd(c, d) = 1 the form dx - cy attains 1, so the minimum is 2a.
    if let [j] = active[..] {
        return Ok(2 * coeffs[j]);
    }

    // Norm case. Any nonzero class already gives an upper bound b on the
    // minimum; seed b with the meridian, longitude, their sums, and the slope
    // directions themselves, then scan every lattice class in the ball of
    // radius b. The scan box is exact: the ball {||.|| <= b} is a polygon
    // whose vertices lie on the rays +-(c_j, d_j) at parameter
    // t_j = b / ||(c_j, d_j)||, so its extent is
    //   |x| <= max_j b*|c_j| / ||(c_j, d_j)||,
    //   |y| <= max_j b*d_j / ||(c_j, d_j)||.
    // Central symmetry lets us scan y >= 0 only (x > 0 on the y = 0 row).
    let mut seeds = vec![
        PeripheralClass::new(1, 0),
        PeripheralClass::new(0, 1),
        PeripheralClass::new(1, 1),
        PeripheralClass::new(1, -1),
    ];
    seeds.extend(active.iter().map(|&j| sys.slopes[j].class()));
    let bound = seeds
        .iter()
        .map(|&g| eval_unchecked(sys, coeffs, g))
        .filter(|&v| v > 0)
        .min()
        .expect("a norm is positive on nonzero classes");

    let (x_max, y_max) = ball_box(sys, coeffs, &active, bound);
    let mut best = bound;
    for y in 0..=y_max {
        let x_lo = if y == 0 { 1 } else { -x_max };
        for x in x_lo..=x_max {
            let value = eval_unchecked(sys, coeffs, PeripheralClass::new(x, y));
            if value > 0 && value < best {
                best = value;
            }
        }
    }
    Ok(best)
}

/// Half-widths of the bounding box of the ball of the given radius, rounded
/// up to integers. Requires every active direction to have positive norm,
/// which holds whenever there are two or more active slopes.
pub(crate) fn ball_box(
    sys: &SlopeSystem,
    coeffs: &[i64],
    active: &[usize],
    radius: i64,
) -> (i64, i64) {
    let div_ceil = |a: i128, b: i128| -> i64 {
        ((a + b - 1) / b).try_into().expect("ball box overflows i64")
    };
    let mut x_max = 0;
    let mut y_max = 0;
    for &j in active {
        let slope = &sys.slopes[j];
        let n_j = eval_unchecked(sys, coeffs, slope.class());
        assert!(n_j > 0, "ball box is unbounded along {slope}");
        x_max = x_max.max(div_ceil(
            radius as i128 * slope.numerator().unsigned_abs() as i128,
            n_j as i128,
        ));
        y_max = y_max.max(div_ceil(radius as i128 * slope.denominator() as i128, n_j as i128));
    }
    (x_max, y_max)
}

/// Norm curve or r-curve, by the number of active slopes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    NormCurve,
    RCurve(Slope),
}

impl std::fmt::Display for CurveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveKind::NormCurve => write!(f, "norm curve"),
            CurveKind::RCurve(r) => write!(f, "r-curve (r = {r})"),
        }
    }
}

/// A coefficient vector together with its minimal positive norm and kind.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSolution {
    pub coeffs: Vec<i64>,
    /// Minimal positive norm; even and positive.
    pub s: i64,
    pub kind: CurveKind,
}

impl CurveSolution {
    pub fn is_norm_curve(&self) -> bool {
        matches!(self.kind, CurveKind::NormCurve)
    }

    pub fn r_curve_slope(&self) -> Option<Slope> {
        match self.kind {
            CurveKind::RCurve(r) => Some(r),
            CurveKind::NormCurve => None,
        }
    }
}

/// Classify a coefficient vector: exactly one active slope makes an r-curve
/// at that slope, two or more make a norm curve.
pub fn classify(sys: &SlopeSystem, coeffs: &[i64]) -> Result<CurveSolution, SeminormError> {
    let s = minimal_positive_norm(sys, coeffs)?;
    let active = sys.active_indices(coeffs);
    let kind = match active[..] {
        [j] => CurveKind::RCurve(sys.slopes[j]),
        _ => CurveKind::NormCurve,
    };
    Ok(CurveSolution {
        coeffs: coeffs.to_vec(),
        s,
        kind,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pretzel_system() -> SlopeSystem {
        SlopeSystem::new(vec![
            Slope::integral(-14),
            Slope::integral(0),
            Slope::new(8, 5).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let sys = pretzel_system();
        let coeffs = [1, 3, 1];
        assert_eq!(
            evaluate(&sys, &coeffs, PeripheralClass::new(1, 0)).unwrap(),
            18
        );
        assert_eq!(
            evaluate(&sys, &coeffs, PeripheralClass::new(1, 1)).unwrap(),
            42
        );
        assert_eq!(
            evaluate(&sys, &coeffs, PeripheralClass::new(0, 1)).unwrap(),
            44
        );
    }

    #[test]
    fn evaluate_rejects_bad_vectors() {
        let sys = pretzel_system();
        assert_eq!(
            evaluate(&sys, &[1, 3], PeripheralClass::new(1, 0)),
            Err(SeminormError::LengthMismatch { expected: 3, got: 2 })
        );
        assert_eq!(
            evaluate(&sys, &[1, -3, 1], PeripheralClass::new(1, 0)),
            Err(SeminormError::NegativeCoefficient { index: 1, value: -3 })
        );
    }

    #[test]
    fn minimal_positive_norm_examples() {
        let sys = pretzel_system();
        assert_eq!(minimal_positive_norm(&sys, &[1, 3, 1]).unwrap(), 18);
        assert_eq!(minimal_positive_norm(&sys, &[0, 1, 0]).unwrap(), 2);

        let single = SlopeSystem::new(vec![Slope::integral(0)]).unwrap();
        assert_eq!(minimal_positive_norm(&single, &[5]).unwrap(), 10);

        assert_eq!(
            minimal_positive_norm(&sys, &[0, 0, 0]),
            Err(SeminormError::AllZeroCoefficients)
        );
    }

    #[test]
    fn classify_examples() {
        let sys = pretzel_system();

        let norm_curve = classify(&sys, &[1, 3, 1]).unwrap();
        assert_eq!(norm_curve.kind, CurveKind::NormCurve);
        assert_eq!(norm_curve.s, 18);

        let r0 = classify(&sys, &[0, 1, 0]).unwrap();
        assert_eq!(r0.kind, CurveKind::RCurve(Slope::integral(0)));
        assert_eq!(r0.s, 2);

        let r85 = classify(&sys, &[0, 0, 2]).unwrap();
        assert_eq!(r85.kind, CurveKind::RCurve(Slope::new(8, 5).unwrap()));
        assert_eq!(r85.s, 4);
    }

    #[test]
    fn duplicate_slopes_rejected() {
        let err = SlopeSystem::new(vec![Slope::integral(0), Slope::new(0, 7).unwrap()]);
        assert_eq!(err, Err(SeminormError::DuplicateSlope(Slope::integral(0))));
        assert_eq!(SlopeSystem::new(vec![]), Err(SeminormError::EmptySystem));
    }

    #[test]
    fn meridian_slope_in_system_is_supported() {
        // ||(x,y)|| = 2|x| + 2|y|: the square norm.
        let sys =
            SlopeSystem::new(vec![Slope::integral(0), Slope::MERIDIAN]).unwrap();
        assert_eq!(
            evaluate(&sys, &[1, 1], PeripheralClass::new(3, -2)).unwrap(),
            10
        );
        assert_eq!(minimal_positive_norm(&sys, &[1, 1]).unwrap(), 2);
    }

    /// Naive oracle: scan a box that provably contains a minimizer.
    ///
    /// At a minimizer, for any active slope c/d the strip value u = dx - cy
    /// satisfies 2a|u| <= ||mu||, so |u| <= ||mu||/2. Solving two active
    /// strips (Cramer, determinant >= 1 for distinct reduced slopes) gives
    /// |x|, |y| <= (max|c| + max d) * ||mu|| / 2. For a single active slope
    /// Bezout gives a witness with |x| <= |c|, |y| <= d.
    fn naive_minimal_norm(sys: &SlopeSystem, coeffs: &[i64]) -> i64 {
        let mu = eval_unchecked(sys, coeffs, PeripheralClass::new(1, 0));
        let c_max = sys.slopes().iter().map(|s| s.numerator().abs()).max().unwrap();
        let d_max = sys.slopes().iter().map(|s| s.denominator()).max().unwrap();
        let m = (c_max + d_max) * (mu / 2 + 1) + 1;
        let mut best = i64::MAX;
        for x in -m..=m {
            for y in -m..=m {
                if (x, y) == (0, 0) {
                    continue;
                }
                let v = eval_unchecked(sys, coeffs, PeripheralClass::new(x, y));
                if v > 0 && v < best {
                    best = v;
                }
            }
        }
        best
    }

    #[test]
    fn minimal_norm_matches_naive_oracle_on_small_systems() {
        let systems = vec![
            pretzel_system(),
            SlopeSystem::new(vec![Slope::integral(-18), Slope::integral(0), Slope::new(8, 7).unwrap()])
                .unwrap(),
            SlopeSystem::new(vec![Slope::new(1, 2).unwrap(), Slope::new(-3, 4).unwrap()]).unwrap(),
            SlopeSystem::new(vec![Slope::integral(0), Slope::MERIDIAN, Slope::integral(1)]).unwrap(),
        ];
        for sys in &systems {
            let m = sys.len();
            let mut coeffs = vec![0i64; m];
            // All vectors with entries in 0..=2, skipping the zero vector.
            loop {
                let mut idx = 0;
                while idx < m {
                    coeffs[idx] += 1;
                    if coeffs[idx] <= 2 {
                        break;
                    }
                    coeffs[idx] = 0;
                    idx += 1;
                }
                if idx == m {
                    break;
                }
                if coeffs.iter().all(|&a| a == 0) {
                    continue;
                }
                assert_eq!(
                    minimal_positive_norm(sys, &coeffs).unwrap(),
                    naive_minimal_norm(sys, &coeffs),
                    "mismatch for {coeffs:?} over {:?}",
                    sys.slopes()
                );
            }
        }
    }

    proptest! {
        #[test]
        fn evaluate_is_even_nonnegative_and_homogeneous(
            x in -40i64..=40, y in -40i64..=40, k in -4i64..=4,
            a in 0i64..=5, b in 0i64..=5, c in 0i64..=5,
        ) {
            let sys = pretzel_system();
            let coeffs = [a, b, c];
            let g = PeripheralClass::new(x, y);
            let v = evaluate(&sys, &coeffs, g).unwrap();
            prop_assert!(v >= 0);
            prop_assert_eq!(v % 2, 0);
            let kv = evaluate(&sys, &coeffs, PeripheralClass::new(k * x, k * y)).unwrap();
            prop_assert_eq!(kv, k.abs() * v);
        }

        #[test]
        fn evaluate_satisfies_triangle_inequality(
            x1 in -30i64..=30, y1 in -30i64..=30,
            x2 in -30i64..=30, y2 in -30i64..=30,
        ) {
            let sys = pretzel_system();
            let coeffs = [1, 3, 1];
            let g = PeripheralClass::new(x1, y1);
            let h = PeripheralClass::new(x2, y2);
            let gh = PeripheralClass::new(x1 + x2, y1 + y2);
            prop_assert!(
                evaluate(&sys, &coeffs, gh).unwrap()
                    <= evaluate(&sys, &coeffs, g).unwrap()
                        + evaluate(&sys, &coeffs, h).unwrap()
            );
        }

        #[test]
        fn norm_curve_vanishes_only_at_zero(x in -25i64..=25, y in -25i64..=25) {
            let sys = pretzel_system();
            let v = evaluate(&sys, &[1, 3, 1], PeripheralClass::new(x, y)).unwrap();
            prop_assert_eq!(v == 0, (x, y) == (0, 0));
        }

        #[test]
        fn r_curve_is_rescaled_distance(x in -25i64..=25, y in -25i64..=25, a in 1i64..=5) {
            let sys = pretzel_system();
            let g = PeripheralClass::new(x, y);
            let v = evaluate(&sys, &[0, a, 0], g).unwrap();
            prop_assert_eq!(v, 2 * a * g.distance(&Slope::integral(0)));
            prop_assert_eq!(v == 0, x == 0);
        }

        #[test]
        fn minimum_is_bounded_by_meridian_norm(a in 0i64..=4, b in 0i64..=4, c in 0i64..=4) {
            prop_assume!(a + b + c > 0);
            let sys = pretzel_system();
            let coeffs = [a, b, c];
            let s = minimal_positive_norm(&sys, &coeffs).unwrap();
            prop_assert!(s > 0);
            prop_assert_eq!(s % 2, 0);
            prop_assert!(s <= evaluate(&sys, &coeffs, PeripheralClass::new(1, 0)).unwrap());
        }
    }
}
