//! Extremal bounds for the path and cycle quadratic forms over ordered
//! compositions of `n` into `k` positive parts, with closed forms for the
//! path form, a closed lower bound for the cycle form, attainment witnesses
//! and an exhaustive brute-force optimizer used as an independent oracle.

use crate::error::{Error, Result};

/// Ordered tuple of positive integers with a fixed sum.
#[derive(Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u64>,
}

impl Composition {
    pub fn new(parts: Vec<u64>) -> Result<Composition> {
        if parts.is_empty() || parts.iter().any(|&x| x == 0) {
            return Err(Error::Parse("composition parts must be positive".into()));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn sum(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// `x_1 x_2 + x_2 x_3 + ... + x_{k-1} x_k`.
pub fn path_form(c: &Composition) -> u64 {
    c.parts.windows(2).map(|w| w[0] * w[1]).sum()
}

/// `x_1 x_2 + ... + x_{k-1} x_k + x_k x_1` (for k = 2 this is `2 x_1 x_2`).
pub fn cycle_form(c: &Composition) -> u64 {
    let k = c.parts.len();
    path_form(c) + c.parts[k - 1] * c.parts[0]
}

/// Extremal values of a form together with witnesses that attain them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QFormBounds {
    pub lower: u64,
    pub upper: Option<u64>,
    pub lower_witness: Composition,
    pub upper_witness: Option<Composition>,
}

fn check_range(n: u64, k: usize) -> Result<()> {
    if k < 2 || (n as u128) < k as u128 {
        return Err(Error::InvalidRange {
            n: n as usize,
            k,
            min_k: 2,
        });
    }
    Ok(())
}

/// Closed-form extrema of the path form over compositions of `n` into `k`
/// positive parts: lower bound `n - 1`, upper bound
/// `floor(n/2) * ceil(n/2)` for k in {2, 3} and
/// `floor((n-k+4)/2) * ceil((n-k+4)/2) + k - 5` for k >= 4.
pub fn path_form_bounds(n: u64, k: usize) -> Result<QFormBounds> {
    check_range(n, k)?;
    let ku = k as u64;

    let mut lower_parts = vec![1u64; k];
    lower_parts[0] = n - ku + 1;
    let lower_witness = Composition::new(lower_parts)?;
    let lower = n - 1;
    debug_assert_eq!(path_form(&lower_witness), lower);

    let (upper, upper_witness) = if k <= 3 {
        let upper = (n / 2) * n.div_ceil(2);
        let witness = if k == 2 {
            Composition::new(vec![n / 2, n.div_ceil(2)])?
        } else {
            // the middle part takes floor(n/2); the outer split of ceil(n/2)
            // is free, fixed here as (ceil(n/2) - 1, 1)
            Composition::new(vec![n.div_ceil(2) - 1, n / 2, 1])?
        };
        (upper, witness)
    } else {
        let m = n - ku + 4;
        let upper = (m / 2) * m.div_ceil(2) + ku - 5;
        let mut parts = vec![1u64; k];
        parts[k - 3] = (n - ku + 2) / 2;
        parts[k - 2] = (n - ku + 2).div_ceil(2);
        (upper, Composition::new(parts)?)
    };
    debug_assert_eq!(path_form(&upper_witness), upper);

    Ok(QFormBounds {
        lower,
        upper: Some(upper),
        lower_witness,
        upper_witness: Some(upper_witness),
    })
}

/// Sharp lower bound `2n - k` of the cycle form. No closed-form upper bound
/// is provided; use [`brute_force_extrema`] for exact maxima. The witness is
/// the lexicographically least minimizer found by the oracle.
pub fn cycle_form_lower(n: u64, k: usize) -> Result<QFormBounds> {
    check_range(n, k)?;
    let extrema = brute_force_extrema(n, k, FormKind::Cycle)?;
    debug_assert_eq!(extrema.min, 2 * n - k as u64);
    Ok(QFormBounds {
        lower: 2 * n - k as u64,
        upper: None,
        lower_witness: extrema.argmin,
        upper_witness: None,
    })
}

/// Which quadratic form the oracle optimizes.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum FormKind {
    Path,
    Cycle,
}

impl FormKind {
    pub fn eval(self, c: &Composition) -> u64 {
        match self {
            FormKind::Path => path_form(c),
            FormKind::Cycle => cycle_form(c),
        }
    }
}

/// Iterator over all compositions of `n` into `k` positive parts in
/// lexicographic order. Yields exactly `C(n-1, k-1)` items.
pub fn compositions(n: u64, k: usize) -> Result<CompositionIter> {
    if k < 1 || n < k as u64 {
        return Err(Error::InvalidRange {
            n: n as usize,
            k,
            min_k: 1,
        });
    }
    let mut first = vec![1u64; k];
    first[k - 1] = n - k as u64 + 1;
    Ok(CompositionIter { next: Some(first) })
}

pub struct CompositionIter {
    next: Option<Vec<u64>>,
}

impl Iterator for CompositionIter {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let current = self.next.take()?;
        let k = current.len();
        // lexicographic successor: find the rightmost position i < k-1 whose
        // suffix carries slack, move one unit onto it, reset the rest minimal
        let mut succ = None;
        let mut suffix: u64 = 0;
        for i in (0..k.saturating_sub(1)).rev() {
            suffix += current[i + 1];
            if suffix > (k - 1 - i) as u64 {
                let mut parts = current[..=i].to_vec();
                parts[i] += 1;
                let mut rest = suffix - 1;
                for _ in i + 1..k - 1 {
                    parts.push(1);
                    rest -= 1;
                }
                parts.push(rest);
                succ = Some(parts);
                break;
            }
        }
        self.next = succ;
        Some(Composition { parts: current })
    }
}

/// Exact extrema of a form by full enumeration.
#[derive(Clone, Debug)]
pub struct Extrema {
    pub min: u64,
    pub argmin: Composition,
    pub max: u64,
    pub argmax: Composition,
}

/// Refuse enumerations beyond this many compositions.
pub const ORACLE_CAP: u128 = 10_000_000;

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Exhaustively minimizes and maximizes the form over all compositions of
/// `n` into `k` positive parts. Ties are broken by the lexicographically
/// least witness (the first one found, since enumeration is lexicographic).
pub fn brute_force_extrema(n: u64, k: usize, form: FormKind) -> Result<Extrema> {
    check_range(n, k)?;
    let space = binomial(n - 1, k as u64 - 1);
    if space > ORACLE_CAP {
        return Err(Error::SearchTooLarge(space, ORACLE_CAP));
    }
    let mut iter = compositions(n, k)?;
    let first = iter.next().expect("space is nonempty");
    let v0 = form.eval(&first);
    let mut out = Extrema {
        min: v0,
        argmin: first.clone(),
        max: v0,
        argmax: first,
    };
    for c in iter {
        let v = form.eval(&c);
        if v < out.min {
            out.min = v;
            out.argmin = c.clone();
        }
        if v > out.max {
            out.max = v;
            out.argmax = c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u64]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn path_form_values() {
        assert_eq!(path_form(&comp(&[4, 1, 1, 1])), 6);
        assert_eq!(path_form(&comp(&[1, 2, 3, 1])), 11);
        assert_eq!(path_form(&comp(&[1, 1])), 1);
    }

    #[test]
    fn cycle_form_values() {
        assert_eq!(cycle_form(&comp(&[3, 1, 1, 1, 1])), 9);
        assert_eq!(cycle_form(&comp(&[1; 6])), 6);
        assert_eq!(cycle_form(&comp(&[1, 3])), 6);
    }

    #[test]
    fn composition_rejects_zero_parts() {
        assert!(Composition::new(vec![1, 0, 2]).is_err());
        assert!(Composition::new(vec![]).is_err());
    }

    #[test]
    fn compositions_lexicographic() {
        let all: Vec<Vec<u64>> = compositions(4, 2)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect();
        assert_eq!(all, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(10, 4).unwrap().count(), 84);
        let only: Vec<_> = compositions(3, 3).unwrap().collect();
        assert_eq!(only, vec![comp(&[1, 1, 1])]);
        // lexicographic and duplicate-free
        let seq: Vec<Vec<u64>> = compositions(7, 3)
            .unwrap()
            .map(|c| c.parts().to_vec())
            .collect();
        let mut sorted = seq.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(seq, sorted);
        assert_eq!(seq.len(), 15);
    }

    #[test]
    fn path_bounds_examples() {
        let b = path_form_bounds(7, 4).unwrap();
        assert_eq!(b.lower, 6);
        assert_eq!(b.upper, Some(11));
        assert_eq!(path_form(&b.lower_witness), 6);
        assert_eq!(path_form(b.upper_witness.as_ref().unwrap()), 11);

        let b = path_form_bounds(7, 2).unwrap();
        assert_eq!(b.upper, Some(12));

        for k in 2..=8 {
            let b = path_form_bounds(k as u64, k).unwrap();
            assert_eq!(b.lower, k as u64 - 1);
            assert_eq!(b.upper, Some(k as u64 - 1));
        }
        assert!(path_form_bounds(3, 4).is_err());
        assert!(path_form_bounds(5, 1).is_err());
    }

    #[test]
    fn cycle_lower_examples() {
        let b = cycle_form_lower(7, 5).unwrap();
        assert_eq!(b.lower, 9);
        assert_eq!(cycle_form(&b.lower_witness), 9);
        let b = cycle_form_lower(6, 6).unwrap();
        assert_eq!(b.lower, 6);
        assert_eq!(b.lower_witness, comp(&[1; 6]));
        let b = cycle_form_lower(6, 2).unwrap();
        assert_eq!(b.lower, 10);
        assert_eq!(b.lower_witness, comp(&[1, 5]));
    }

    #[test]
    fn brute_force_matches_closed_forms() {
        let e = brute_force_extrema(7, 4, FormKind::Path).unwrap();
        assert_eq!((e.min, e.max), (6, 11));
        let e = brute_force_extrema(7, 5, FormKind::Cycle).unwrap();
        assert_eq!(e.min, 9);
        let e = brute_force_extrema(5, 5, FormKind::Path).unwrap();
        assert_eq!((e.min, e.max), (4, 4));
    }

    #[test]
    fn oracle_cap_enforced() {
        assert!(matches!(
            brute_force_extrema(64, 32, FormKind::Path),
            Err(Error::SearchTooLarge(_, _))
        ));
    }

    #[test]
    fn reversal_and_rotation_symmetry() {
        let c = comp(&[2, 5, 1, 3]);
        let rev = comp(&[3, 1, 5, 2]);
        assert_eq!(path_form(&c), path_form(&rev));
        assert_eq!(cycle_form(&c), cycle_form(&rev));
        let rot = comp(&[5, 1, 3, 2]);
        assert_eq!(cycle_form(&c), cycle_form(&rot));
    }
}
