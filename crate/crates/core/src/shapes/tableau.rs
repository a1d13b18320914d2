use std::fmt;

use super::multipartition::{Box_, Family, Multipartition};
use super::perm::Perm;

/// A standard tableau of a multipartition shape: a bijection boxes -> 1..=n
/// increasing along rows and down columns of every component.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct StdTableau {
    pub shape: Multipartition,
    /// Entry of each row, per component, laid out like the diagram.
    pub rows: Vec<Vec<Vec<usize>>>,
}

impl StdTableau {
    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn entry(&self, b: &Box_) -> usize {
        let start = self.shape.col_start(b.comp, b.row);
        self.rows[b.comp][b.row - 1][b.col - start]
    }

    /// The box containing entry `k`.
    pub fn box_of(&self, k: usize) -> Box_ {
        for (c, comp) in self.rows.iter().enumerate() {
            for (r0, row) in comp.iter().enumerate() {
                for (j0, &e) in row.iter().enumerate() {
                    if e == k {
                        let start = self.shape.col_start(c, r0 + 1);
                        return Box_::new(r0 + 1, start + j0, c);
                    }
                }
            }
        }
        panic!("entry {} not present", k)
    }

    fn from_filling(shape: Multipartition, fill: impl Fn(&Box_) -> usize) -> Self {
        let mut rows: Vec<Vec<Vec<usize>>> = shape
            .components
            .iter()
            .map(|parts| parts.iter().map(|&len| vec![0; len]).collect())
            .collect();
        for b in shape.boxes() {
            let start = shape.col_start(b.comp, b.row);
            rows[b.comp][b.row - 1][b.col - start] = fill(&b);
        }
        StdTableau { shape, rows }
    }

    /// The row-initial tableau: symbols 1..n inserted consecutively by rows
    /// from the first component.
    pub fn row_initial(shape: &Multipartition) -> Self {
        let order = shape.boxes();
        Self::from_filling(shape.clone(), |b| order.iter().position(|x| x == b).unwrap() + 1)
    }

    /// The column-initial tableau: symbols inserted consecutively by columns
    /// from the last component.
    pub fn col_initial(shape: &Multipartition) -> Self {
        let order = shape.boxes_by_columns();
        Self::from_filling(shape.clone(), |b| order.iter().position(|x| x == b).unwrap() + 1)
    }

    pub fn is_standard(&self) -> bool {
        for b in self.shape.boxes() {
            let e = self.entry(&b);
            let right = Box_::new(b.row, b.col + 1, b.comp);
            if self.shape.contains(&right) && self.entry(&right) <= e {
                return false;
            }
            let down = Box_::new(b.row + 1, b.col, b.comp);
            if self.shape.contains(&down) && self.entry(&down) <= e {
                return false;
            }
        }
        true
    }

    /// Reading word: entries along the row-reading order of the shape.
    pub fn reading_word(&self) -> Vec<usize> {
        self.shape.boxes().iter().map(|b| self.entry(b)).collect()
    }

    /// Acts with `w` on the entries: `(w . t)(box) = w(t(box))`.
    pub fn act(&self, w: &Perm) -> StdTableau {
        let mut t = self.clone();
        for comp in t.rows.iter_mut() {
            for row in comp.iter_mut() {
                for e in row.iter_mut() {
                    *e = w.apply(*e);
                }
            }
        }
        t
    }

    /// Whether `s_i` is admissible, i.e. `s_i . t` is still standard.
    pub fn admissible(&self, i: usize) -> bool {
        let bi = self.box_of(i);
        let bj = self.box_of(i + 1);
        // Swapping i and i+1 breaks standardness exactly when they share a
        // row or column of the same component.
        !(bi.comp == bj.comp && (bi.row == bj.row || bi.col == bj.col))
    }

    pub fn apply_s(&self, i: usize) -> StdTableau {
        self.act(&Perm::transposition(self.n(), i))
    }

    /// The permutation `d` with `self = d . other` (same shape required).
    pub fn perm_from(&self, other: &StdTableau) -> Perm {
        assert_eq!(self.shape, other.shape, "tableaux of different shapes");
        let n = self.n();
        let mut images = vec![0usize; n];
        for b in self.shape.boxes() {
            images[other.entry(&b) - 1] = self.entry(&b);
        }
        Perm::from_images(&images)
    }

    /// Restriction to entries `1..=k`.
    pub fn restrict(&self, k: usize) -> StdTableau {
        let mut shape = self.shape.clone();
        let mut rows = self.rows.clone();
        for e in ((k + 1)..=self.n()).rev() {
            let b = {
                let t = StdTableau { shape: shape.clone(), rows: rows.clone() };
                t.box_of(e)
            };
            shape = shape.without_box(&b);
            let row = &mut rows[b.comp];
            row[b.row - 1].pop();
            if row[b.row - 1].is_empty() {
                row.remove(b.row - 1);
            }
        }
        StdTableau { shape, rows }
    }

    pub fn diagonal_data(&self) -> DiagonalData {
        DiagonalData::new(self)
    }
}

impl fmt::Display for StdTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .rows
            .iter()
            .map(|comp| {
                let rs: Vec<String> = comp
                    .iter()
                    .map(|row| row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
                    .collect();
                format!("({})", rs.join(";"))
            })
            .collect();
        write!(f, "[{}]", comps.join("|"))
    }
}

/// Diagonal bookkeeping of a standard tableau: the diagonal box list ordered
/// by the row-initial tableau's entries, the entry sets of `self` at those
/// boxes, the odd-position subset, and derived flags.
#[derive(Clone, Debug)]
pub struct DiagonalData {
    /// Diagonal boxes ordered by increasing row-initial entry.
    pub boxes: Vec<Box_>,
    /// Entries of the tableau at `boxes`, same order.
    pub entries: Vec<usize>,
    /// Entries at the odd positions (1st, 3rd, ...) of `boxes`.
    pub od_entries: Vec<usize>,
    /// #D of the shape.
    pub count: usize,
    /// 1 when #D is odd, 0 otherwise.
    pub d_lambda: u8,
    /// Entry at the last diagonal box, the class-splitting index.
    pub top_entry: Option<usize>,
}

impl DiagonalData {
    pub fn new(t: &StdTableau) -> Self {
        let tl = StdTableau::row_initial(&t.shape);
        let mut boxes = t.shape.diagonal_boxes();
        boxes.sort_by_key(|b| tl.entry(b));
        let entries: Vec<usize> = boxes.iter().map(|b| t.entry(b)).collect();
        let od_entries: Vec<usize> = entries.iter().copied().step_by(2).collect();
        let count = boxes.len();
        DiagonalData {
            top_entry: entries.last().copied(),
            d_lambda: (count % 2) as u8,
            boxes,
            entries,
            od_entries,
            count,
        }
    }

    pub fn in_d(&self, k: usize) -> bool {
        self.entries.contains(&k)
    }

    pub fn in_od(&self, k: usize) -> bool {
        self.od_entries.contains(&k)
    }

    /// 1-based position of entry `k` in the diagonal list, if present.
    pub fn position(&self, k: usize) -> Option<usize> {
        self.entries.iter().position(|&e| e == k).map(|p| p + 1)
    }
}

/// All standard tableaux of the shape, reading-word lexicographic order;
/// the row-initial tableau comes first.
pub fn enumerate_std_tableaux(shape: &Multipartition) -> Vec<StdTableau> {
    // Grow shapes box by box; entry k sits at the k-th added box.
    fn rec(
        target: &Multipartition,
        cur: &Multipartition,
        placed: &mut Vec<(Box_, usize)>,
        out: &mut Vec<StdTableau>,
    ) {
        let k = placed.len() + 1;
        if cur == target {
            let shape = target.clone();
            let mut t = StdTableau {
                shape: shape.clone(),
                rows: shape
                    .components
                    .iter()
                    .map(|parts| parts.iter().map(|&len| vec![0; len]).collect())
                    .collect(),
            };
            for (b, e) in placed.iter() {
                let start = shape.col_start(b.comp, b.row);
                t.rows[b.comp][b.row - 1][b.col - start] = *e;
            }
            out.push(t);
            return;
        }
        for b in cur.addable() {
            if target.contains(&b) {
                let next = cur.with_box(&b);
                placed.push((b, k));
                rec(target, &next, placed, out);
                placed.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(shape, &Multipartition::empty(shape.family, shape.m), &mut Vec::new(), &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Row-initial and column-initial tableaux of a shape.
pub fn initial_tableaux(shape: &Multipartition) -> (StdTableau, StdTableau) {
    (StdTableau::row_initial(shape), StdTableau::col_initial(shape))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes::multipartition::enumerate_multipartitions;

    fn paper_shape() -> Multipartition {
        Multipartition::new(Family::S, 1, vec![vec![2, 1], vec![1, 1]])
    }

    #[test]
    fn row_initial_matches_expected() {
        let t = StdTableau::row_initial(&paper_shape());
        assert_eq!(t.rows, vec![vec![vec![1, 2], vec![3]], vec![vec![4], vec![5]]]);
    }

    #[test]
    fn paper_standard_tableau_is_enumerated() {
        let ts = enumerate_std_tableaux(&paper_shape());
        let target = vec![vec![vec![1, 3], vec![5]], vec![vec![2], vec![4]]];
        assert!(ts.iter().any(|t| t.rows == target));
        assert_eq!(ts[0], StdTableau::row_initial(&paper_shape()));
        for t in &ts {
            assert!(t.is_standard());
        }
    }

    #[test]
    fn single_row_has_unique_tableau() {
        let shape = Multipartition::new(Family::Zero, 1, vec![vec![4]]);
        assert_eq!(enumerate_std_tableaux(&shape).len(), 1);
    }

    #[test]
    fn single_column_initials_agree() {
        let shape = Multipartition::new(Family::Zero, 1, vec![vec![1, 1]]);
        let (tl, tc) = initial_tableaux(&shape);
        assert_eq!(tl, tc);
    }

    #[test]
    fn row_and_column_count_for_small_bipartition() {
        let shape = Multipartition::new(Family::Zero, 2, vec![vec![2], vec![1]]);
        assert_eq!(enumerate_std_tableaux(&shape).len(), 3);
    }

    #[test]
    fn diagonal_data_of_paper_example() {
        let shape = paper_shape();
        let ts = enumerate_std_tableaux(&shape);
        let t = ts
            .iter()
            .find(|t| t.rows == vec![vec![vec![1, 3], vec![5]], vec![vec![2], vec![4]]])
            .unwrap();
        let d = t.diagonal_data();
        assert_eq!(d.boxes, vec![Box_::new(1, 1, 0), Box_::new(2, 2, 0)]);
        assert_eq!(d.entries, vec![1, 5]);
        assert_eq!(d.od_entries, vec![1]);
        assert_eq!(d.d_lambda, 0);
    }

    #[test]
    fn family_zero_has_empty_diagonal() {
        for mp in enumerate_multipartitions(3, 2, Family::Zero) {
            let t = StdTableau::row_initial(&mp);
            let d = t.diagonal_data();
            assert_eq!(d.count, 0);
            assert_eq!(d.d_lambda, 0);
        }
    }

    #[test]
    fn perm_between_round_trips() {
        for mp in enumerate_multipartitions(4, 1, Family::S) {
            let ts = enumerate_std_tableaux(&mp);
            for s in &ts {
                for t in &ts {
                    let d = s.perm_from(t);
                    assert_eq!(&t.act(&d), s);
                    // Every prefix of the canonical word stays standard.
                    let mut cur = t.clone();
                    for &i in d.canonical_word().iter().rev() {
                        assert!(cur.admissible(i));
                        cur = cur.apply_s(i);
                    }
                    assert_eq!(&cur, s);
                }
            }
        }
    }

    #[test]
    fn restriction_of_row_initial() {
        let shape = paper_shape();
        let t = StdTableau::row_initial(&shape);
        for k in 1..=5 {
            let r = t.restrict(k);
            assert_eq!(r, StdTableau::row_initial(&r.shape));
            assert_eq!(r.n(), k);
        }
        assert_eq!(t.restrict(5), t);
    }
}
