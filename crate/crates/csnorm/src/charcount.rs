//! Character counting for triangle groups and the norm budgets derived from
//! the two-fold branched cyclic cover.
//!
//! The counts here are purely arithmetic: the number of PSL2(C) characters of
//! the triangle group `Delta(p,q,r)` (total and reducible), the doubling that
//! lifts irreducible PSL2(C) characters to SL2(C), and the dihedral character
//! count read off the knot determinant. Combining them gives the two budgets
//! the solver consumes: the total minimal norm `S` and the small Seifert
//! filling budget `C`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Each dihedral or triangle-group SL2(C) character adds two to a norm budget.
pub const CONTRIBUTION: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharCountError {
    #[error("cone order {0} is invalid: triangle group orders must be >= 2")]
    InvalidConeOrder(i64),
    #[error("knot determinant {0} is invalid: |Delta_K(-1)| is odd and >= 1")]
    InvalidDeterminant(i64),
}

/// Cone orders `(p, q, r)` of a sphere with three cone points, stored sorted
/// ascending. All counts are symmetric in the three orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleGroup {
    orders: [i64; 3],
}

impl TriangleGroup {
    pub fn new(p: i64, q: i64, r: i64) -> Result<TriangleGroup, CharCountError> {
        for v in [p, q, r] {
            if v < 2 {
                return Err(CharCountError::InvalidConeOrder(v));
            }
        }
        let mut orders = [p, q, r];
        orders.sort_unstable();
        Ok(TriangleGroup { orders })
    }

    pub fn orders(&self) -> [i64; 3] {
        self.orders
    }

    /// Number of PSL2(C) characters of `Delta(p,q,r)`, reducible included.
    pub fn psl2_total_count(&self) -> i64 {
        let [p, q, r] = self.orders;
        psl2_total_raw(p, q, r)
    }

    /// Number of reducible PSL2(C) characters of `Delta(p,q,r)`; these are the
    /// characters of the abelianization `Z/a + Z/(b/a)`.
    pub fn psl2_reducible_count(&self) -> i64 {
        let [p, q, r] = self.orders;
        psl2_reducible_raw(p, q, r)
    }

    /// Number of irreducible PSL2(C) characters.
    pub fn psl2_irreducible_count(&self) -> i64 {
        let n = self.psl2_total_count() - self.psl2_reducible_count();
        debug_assert!(n >= 0, "irreducible count went negative for {self:?}");
        n
    }
}

impl std::fmt::Display for TriangleGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [p, q, r] = self.orders;
        write!(f, "({p},{q},{r})")
    }
}

impl Serialize for TriangleGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.orders.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriangleGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let [p, q, r] = <[i64; 3]>::deserialize(deserializer)?;
        TriangleGroup::new(p, q, r).map_err(serde::de::Error::custom)
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    num_integer::Integer::gcd(&a, &b)
}

fn psl2_total_raw(p: i64, q: i64, r: i64) -> i64 {
    let irr_part = (p - p / 2 - 1) * (q - q / 2 - 1) * (r - r / 2 - 1) + (p / 2) * (q / 2) * (r / 2);
    let gcd_part = gcd(p, q) / 2 + gcd(p, r) / 2 + gcd(q, r) / 2;
    irr_part + gcd_part + 1
}

fn psl2_reducible_raw(p: i64, q: i64, r: i64) -> i64 {
    let a = gcd(gcd(p, q), r);
    let b = gcd(gcd(p * q, p * r), q * r);
    if a % 2 == 1 {
        b / 2 + 1
    } else {
        b / 2 + 2
    }
}

/// Each irreducible PSL2(C) character of one of these groups lifts to exactly
/// two SL2(C) characters.
pub fn sl2_lift_count(n_psl2: i64) -> i64 {
    debug_assert!(n_psl2 >= 0);
    2 * n_psl2
}

/// Number of characters of irreducible (binary dihedral) SL2(C)
/// representations of a knot group: `(|Delta_K(-1)| - 1) / 2`.
pub fn dihedral_count(alex_det: i64) -> Result<i64, CharCountError> {
    if alex_det < 1 || alex_det % 2 == 0 {
        return Err(CharCountError::InvalidDeterminant(alex_det));
    }
    Ok((alex_det - 1) / 2)
}

/// The character budget behind the total minimal norm `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterBudget {
    /// SL2(C) characters of binary dihedral representations.
    pub dihedral_sl2: i64,
    /// SL2(C) lifts of the irreducible triangle-group characters.
    pub triangle_irr_sl2: i64,
    /// `S = 2 * (dihedral_sl2 + triangle_irr_sl2)`.
    pub total_s: i64,
}

/// Total minimal norm `S` of a knot whose two-fold branched cover is Seifert
/// fibred with base orbifold `S^2(p,q,r)` and whose determinant is `alex_det`.
///
/// Representations killing the square of the meridian factor through the cover;
/// the abelian ones account for the dihedral characters and the non-abelian
/// ones for the triangle-group characters, and each character contributes
/// [`CONTRIBUTION`] to `S`.
pub fn total_minimal_norm(
    cone: TriangleGroup,
    alex_det: i64,
) -> Result<CharacterBudget, CharCountError> {
    let dihedral_sl2 = dihedral_count(alex_det)?;
    let triangle_irr_sl2 = sl2_lift_count(cone.psl2_irreducible_count());
    Ok(CharacterBudget {
        dihedral_sl2,
        triangle_irr_sl2,
        total_s: CONTRIBUTION * (dihedral_sl2 + triangle_irr_sl2),
    })
}

/// Budget `C` by which a small Seifert filling with base orbifold
/// `S^2(p,q,r)` can raise the total norm of the filling class over `S`:
/// twice the SL2(C) lift count of the base's irreducible characters.
pub fn seifert_budget(base: TriangleGroup) -> i64 {
    CONTRIBUTION * sl2_lift_count(base.psl2_irreducible_count())
}
