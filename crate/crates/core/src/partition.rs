//! Integer partitions, Young diagram statistics and the dominance order.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing, got {0:?}")]
    NotAPartition(Vec<usize>),
    #[error("cell ({row}, {col}) is not in the diagram of {partition}")]
    CellOutOfDiagram {
        partition: Partition,
        row: usize,
        col: usize,
    },
    #[error("cannot parse partition from {0:?}")]
    Parse(String),
}

/// A weakly decreasing sequence of positive integers. The empty partition
/// is the unique partition of 0.
///
/// `Ord` is the canonical order used everywhere in this crate: by size
/// first, then within a fixed size by descending lexicographic order, so
/// `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. Within one size this lists
/// dominance-larger partitions first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

/// A box of a Young diagram, 1-based `(row, col)` with `col ≤ λ_row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros, so any multiset of parts is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        i.checked_sub(1)
            .and_then(|k| self.parts.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `m_k`, the number of parts equal to `k`.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// `(k, m_k)` for each distinct part, largest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((k, m)) if *k == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `μ ≤ λ` in dominance order (`self` is μ). Partitions of different
    /// sizes are incomparable.
    pub fn dominated_by(&self, lambda: &Partition) -> bool {
        if self.size() != lambda.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(lambda.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += lambda.parts.get(i).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.row >= 1 && cell.col >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell { row: i + 1, col: j }))
    }

    /// Arm and leg of a cell: boxes strictly right of it in its row and
    /// strictly below it in its column.
    pub fn arm_leg(&self, cell: Cell) -> Result<(usize, usize), PartitionError> {
        if !self.contains_cell(cell) {
            return Err(PartitionError::CellOutOfDiagram {
                partition: self.clone(),
                row: cell.row,
                col: cell.col,
            });
        }
        let arm = self.part(cell.row) - cell.col;
        let leg = self.parts.iter().filter(|&&p| p >= cell.col).count() - cell.row;
        Ok((arm, leg))
    }

    /// `(a(s), l(s))` for every cell.
    pub fn arms_legs(&self) -> Vec<(usize, usize)> {
        let conj = self.conjugate();
        self.cells()
            .map(|c| (self.part(c.row) - c.col, conj.part(c.col) - c.row))
            .collect()
    }

    /// `z_λ = ∏ k^{m_k} m_k!`
    pub fn z_factor(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(k, m)| (k as u128).pow(m as u32) * factorial(m))
            .product()
    }

    /// `∏ m_k!`, the scaling between `m_λ` and the augmented monomial.
    pub fn aug_factor(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(_, m)| factorial(m))
            .product()
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::from_unsorted(parts)
    }

    /// `λ` with one copy of `part` removed, if present.
    pub fn remove_part(&self, part: usize) -> Option<Partition> {
        let pos = self.parts.iter().position(|&p| p == part)?;
        let mut parts = self.parts.clone();
        parts.remove(pos);
        Some(Partition { parts })
    }

    pub fn with_part(&self, part: usize) -> Partition {
        self.union(&Partition::from_unsorted(vec![part]))
    }
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).product()
}

/// All partitions of `n` in canonical order (dominance-larger first).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// Another linear extension of dominance on the partitions of `n`:
/// ascending lexicographic order of the conjugates. It differs from
/// [`enumerate_partitions`] from `n = 6` on.
pub fn conjugate_lex_order(n: usize) -> Vec<Partition> {
    let mut ps = enumerate_partitions(n);
    ps.sort_by_cached_key(|p| p.conjugate().parts.clone());
    ps
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma-separated parts, e.g. `"3,1"`; the empty string is `()`.
impl FromStr for Partition {
    type Err = PartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Parse(s.to_string()))?;
        Partition::new(parts).map_err(|_| PartitionError::Parse(s.to_string()))
    }
}

/// Shorthand for literal partitions in tests and examples.
#[macro_export]
macro_rules! partition {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("literal partition") };
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute force: every weakly decreasing sequence of positive integers
    /// bounded by n, kept when it sums to n.
    fn brute_force_count(n: usize) -> usize {
        fn go(rem: usize, max: usize) -> usize {
            if rem == 0 {
                return 1;
            }
            (1..=max.min(rem)).map(|p| go(rem - p, p)).sum()
        }
        go(n, n)
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![
                partition![4],
                partition![3, 1],
                partition![2, 2],
                partition![2, 1, 1],
                partition![1, 1, 1, 1]
            ]
        );
        assert_eq!(enumerate_partitions(8).len(), 22);
        for n in 0..=15 {
            assert_eq!(enumerate_partitions(n).len(), brute_force_count(n));
        }
    }

    #[test]
    fn enumeration_is_sorted_by_ord() {
        for n in 0..=10 {
            let ps = enumerate_partitions(n);
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn enumeration_is_a_linear_extension_of_dominance() {
        for n in 0..=10 {
            let ps = enumerate_partitions(n);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(
                        !a.dominated_by(b),
                        "{a} listed before {b} but dominated by it"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugate_lex_order_is_another_linear_extension() {
        for n in 0..=10 {
            let ps = conjugate_lex_order(n);
            for (i, a) in ps.iter().enumerate() {
                for b in &ps[i + 1..] {
                    assert!(!a.dominated_by(b), "{a} listed before {b}");
                }
            }
            assert_eq!(ps == enumerate_partitions(n), n < 6, "n = {n}");
        }
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(partition![3, 1].conjugate(), partition![2, 1, 1]);
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(partition![2, 2].conjugate(), partition![2, 2]);
    }

    #[test]
    fn dominance_examples() {
        assert!(partition![2, 2].dominated_by(&partition![3, 1]));
        let (a, b) = (partition![3, 1, 1, 1], partition![2, 2, 2]);
        assert!(!a.dominated_by(&b) && !b.dominated_by(&a));
        assert!(partition![2, 1].dominated_by(&partition![2, 1]));
        assert!(!partition![2].dominated_by(&partition![2, 1]));
    }

    #[test]
    fn arm_leg_examples() {
        let c11 = Cell { row: 1, col: 1 };
        assert_eq!(partition![2].arm_leg(c11).unwrap(), (1, 0));
        assert_eq!(partition![1, 1].arm_leg(c11).unwrap(), (0, 1));
        assert_eq!(partition![2, 1].arm_leg(c11).unwrap(), (1, 1));
        assert!(matches!(
            partition![2, 1].arm_leg(Cell { row: 2, col: 2 }),
            Err(PartitionError::CellOutOfDiagram { .. })
        ));
        assert!(partition![1].arm_leg(Cell { row: 0, col: 1 }).is_err());
    }

    #[test]
    fn z_and_aug_factor_examples() {
        assert_eq!(partition![2].z_factor(), 2);
        assert_eq!(partition![1, 1].z_factor(), 2);
        assert_eq!(partition![2, 1, 1].z_factor(), 4);
        assert_eq!(Partition::empty().z_factor(), 1);
        assert_eq!(partition![1, 1, 1].aug_factor(), 6);
        assert_eq!(partition![3, 2, 1].aug_factor(), 1);
        assert_eq!(partition![2, 2, 1].aug_factor(), 2);
    }

    #[test]
    fn union_examples() {
        assert_eq!(partition![2, 1].union(&partition![3]), partition![3, 2, 1]);
        assert_eq!(
            partition![2, 1].union(&Partition::empty()),
            partition![2, 1]
        );
        assert_eq!(partition![2].union(&partition![2]), partition![2, 2]);
    }

    #[test]
    fn constructor_rejects_non_partitions() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn parse_cli_syntax() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), partition![3, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("2,,1".parse::<Partition>().is_err());
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..=12 {
            for p in enumerate_partitions(n) {
                assert_eq!(p.conjugate().conjugate(), p);
            }
        }
    }

    #[test]
    fn conjugation_reverses_dominance() {
        for n in 0..=9 {
            let ps = enumerate_partitions(n);
            for mu in &ps {
                for la in &ps {
                    assert_eq!(
                        mu.dominated_by(la),
                        la.conjugate().dominated_by(&mu.conjugate()),
                        "{mu} vs {la}"
                    );
                }
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 0..=9 {
            let ps = enumerate_partitions(n);
            for a in &ps {
                assert!(a.dominated_by(a));
                for b in &ps {
                    if a.dominated_by(b) && b.dominated_by(a) {
                        assert_eq!(a, b);
                    }
                    for c in &ps {
                        if a.dominated_by(b) && b.dominated_by(c) {
                            assert!(a.dominated_by(c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn arm_is_leg_of_transposed_cell() {
        for n in 0..=9 {
            for la in enumerate_partitions(n) {
                let conj = la.conjugate();
                for c in la.cells() {
                    let (a, l) = la.arm_leg(c).unwrap();
                    let (a2, l2) = conj
                        .arm_leg(Cell {
                            row: c.col,
                            col: c.row,
                        })
                        .unwrap();
                    assert_eq!((a, l), (l2, a2));
                }
                let listed: Vec<_> = la.cells().map(|c| la.arm_leg(c).unwrap()).collect();
                assert_eq!(listed, la.arms_legs());
            }
        }
    }
}
