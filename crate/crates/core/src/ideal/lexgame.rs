use std::fmt;

use serde::Serialize;

use crate::cube::{Monomial, PointSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Player {
    Lea,
    Stan,
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Lea => "Lea",
            Player::Stan => "Stan",
        })
    }
}

/// Solves `Lex(V; w)`.
///
/// Coordinates are played from `n` down to 1. In round `i` Lea forbids
/// `w_i` field values and Stan picks `y_i` among the rest; Stan wins iff
/// the completed `y` lies in `V`. Only the values 0 and 1 can keep Stan
/// inside `V`, so a round with `w_i >= 2` is lost for him, a round with
/// `w_i = 1` needs both fibres to be winning (Lea blocks the other), and a
/// round with `w_i = 0` needs one winning fibre.
///
/// Stan wins exactly when `x^w` is a lex standard monomial of `I(V)`.
pub fn lexgame_winner(v: &PointSet, w: &Monomial) -> Result<Player> {
    if v.dim() != w.dim() {
        return Err(Error::DimensionMismatch { expected: v.dim(), found: w.dim() });
    }
    let exps = w.exponents();
    if exps.iter().any(|&e| e >= 2) {
        return Ok(Player::Lea);
    }
    // Sorting supports as integers makes every fibre "coordinates i+1..n
    // fixed" a contiguous run, split at bit i-1.
    let mut keys: Vec<u64> = v.supports().iter().map(|s| s.bits()).collect();
    keys.sort_unstable();
    Ok(if stan_wins(&keys, v.dim(), w.support().bits()) { Player::Stan } else { Player::Lea })
}

/// `keys` share all bits at positions `>= level`; round `level` decides bit
/// `level - 1`. `blocked` has bit `i - 1` set iff `w_i = 1`.
fn stan_wins(keys: &[u64], level: usize, blocked: u64) -> bool {
    if keys.is_empty() {
        return false;
    }
    if level == 0 || blocked & ((1u64 << level) - 1) == 0 {
        // No blocking left: any nonempty residual set can be completed.
        return true;
    }
    let bit = 1u64 << (level - 1);
    let split = keys.partition_point(|k| k & bit == 0);
    let (zero, one) = keys.split_at(split);
    if blocked & bit != 0 {
        stan_wins(zero, level - 1, blocked) && stan_wins(one, level - 1, blocked)
    } else {
        stan_wins(zero, level - 1, blocked) || stan_wins(one, level - 1, blocked)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn game(points: &str, w: &str) -> Player {
        let v = PointSet::parse(points, None).unwrap();
        lexgame_winner(&v, &Monomial::parse(w, v.dim()).unwrap()).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(game("10,01", "[1]"), Player::Lea);
        assert_eq!(game("10,01", "[2]"), Player::Stan);
        assert_eq!(game("10,01", "1"), Player::Stan);
        assert_eq!(game("10,01,11,00", "[1^2]"), Player::Lea);
        assert_eq!(game("10,01,11,00", "[1,2]"), Player::Stan);
    }

    #[test]
    fn empty_set_is_lost() {
        let v = PointSet::empty(2).unwrap();
        assert_eq!(lexgame_winner(&v, &Monomial::one(2)).unwrap(), Player::Lea);
    }

    #[test]
    fn dimension_mismatch() {
        let v = PointSet::parse("10", None).unwrap();
        assert!(lexgame_winner(&v, &Monomial::one(3)).is_err());
    }
}
