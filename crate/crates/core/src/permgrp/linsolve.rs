//! Exact Gauss-Jordan elimination over the rationals.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i128>;

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &[Vec<i128>], b: &[i128]) -> Option<Vec<Q>> {
    let n = a.len();
    assert!(a.iter().all(|row| row.len() == n) && b.len() == n, "square system");
    let mut m: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| row.iter().map(|&x| Q::from_integer(x)).chain([Q::from_integer(rhs)]).collect())
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot);
        let inv = Q::one() / m[col][col];
        for x in m[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col];
            for k in col..=n {
                let delta = factor * m[col][k];
                m[r][k] -= delta;
            }
        }
    }
    Some(m.into_iter().map(|row| row[n]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two() {
        let x = solve(&[vec![1, 1], vec![1, 2]], &[1, 2]).unwrap();
        assert_eq!(x, vec![Q::from_integer(0), Q::from_integer(1)]);
    }

    #[test]
    fn rational_solution() {
        let x = solve(&[vec![2, 0], vec![0, 3]], &[1, 1]).unwrap();
        assert_eq!(x, vec![Q::new(1, 2), Q::new(1, 3)]);
    }

    #[test]
    fn singular() {
        assert!(solve(&[vec![1, 2], vec![2, 4]], &[1, 2]).is_none());
    }
}
