//! Young combinatorics and Hecke-algebra operator machinery.
//!
//! Partitions, standard tableaux and box contents; the recurrent
//! q-(anti)symmetrizers; Jucys-Murphy operators; general Young projectors
//! built by Jucys-Murphy spectral interpolation; and Littlewood-Richardson
//! coefficients for tensor product decomposition.

use crate::rmatrix::RMatrixProfile;
use crate::scalar::LaurentRational;
use crate::tensor::{r_chain, QMatrix};
use std::collections::BTreeMap;
use std::fmt;

// ---- Partitions ----

/// A partition `nu |- k`: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must weakly decrease"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn height(&self) -> usize {
        self.parts.len()
    }

    pub fn single_row(k: usize) -> Self {
        Partition::new(vec![k])
    }

    pub fn single_column(k: usize) -> Self {
        Partition::new(vec![1; k])
    }

    pub fn is_single_row(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn is_single_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Does `self` contain `other` as a sub-diagram?
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.parts.get(i).map_or(false, |&s| s >= p))
    }

    /// Cells `(row, col)` (1-based) where a box may be added keeping a
    /// valid partition shape.
    pub fn addable_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::new();
        for r in 0..self.parts.len() {
            if r == 0 || self.parts[r - 1] > self.parts[r] {
                cells.push((r + 1, self.parts[r] + 1));
            }
        }
        cells.push((self.parts.len() + 1, 1));
        cells
    }

    /// Parse "(4,3,1,1)".
    pub fn parse(s: &str) -> Option<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<usize>> = t.split(',').map(|x| x.trim().parse().ok()).collect();
        let parts = parts?;
        if parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0) {
            Some(Partition { parts })
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` in reverse-lexicographic order.
pub fn partitions_of(k: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max_part: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: stack.clone(),
            });
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            stack.push(part);
            rec(remaining - part, part, stack, out);
            stack.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out
}

// ---- Standard tableaux ----

/// A standard filling of a Young diagram with 1..k, strictly increasing
/// along rows and down columns.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Build from explicit rows, checking standardness.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Option<Self> {
        let t = StandardTableau { rows };
        let k = t.weight();
        let mut seen = vec![false; k + 1];
        for row in &t.rows {
            for &e in row {
                if e == 0 || e > k || seen[e] {
                    return None;
                }
                seen[e] = true;
            }
        }
        let lens: Vec<usize> = t.rows.iter().map(|r| r.len()).collect();
        if !lens.windows(2).all(|w| w[0] >= w[1]) || lens.iter().any(|&l| l == 0) {
            return None;
        }
        for (r, row) in t.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if c > 0 && row[c - 1] >= e {
                    return None;
                }
                if r > 0 && t.rows[r - 1][c] >= e {
                    return None;
                }
            }
        }
        Some(t)
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn weight(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// 1-based `(row, col)` of the box holding `entry`.
    pub fn box_of(&self, entry: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == entry {
                    return (r + 1, c + 1);
                }
            }
        }
        panic!("entry {entry} not in tableau");
    }

    /// Content exponent `c - r` of the box holding `entry`.
    pub fn content_exp(&self, entry: usize) -> i64 {
        let (r, c) = self.box_of(entry);
        c as i64 - r as i64
    }

    /// Shape of the sub-tableau occupied by entries `1..=m`.
    pub fn shape_below(&self, m: usize) -> Partition {
        let parts: Vec<usize> = self
            .rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= m).count())
            .take_while(|&c| c > 0)
            .collect();
        Partition { parts }
    }

    /// Row-by-row reading word, used for the deterministic ordering.
    fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

/// All standard tableaux of the given shape, sorted lexicographically by
/// their row reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        filled: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        next: usize,
        k: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if next > k {
            out.push(StandardTableau {
                rows: filled.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let c = counts[r];
            if c >= shape[r] {
                continue;
            }
            // standard: the box above must already be filled
            if r > 0 && counts[r - 1] <= c {
                continue;
            }
            filled[r].push(next);
            counts[r] += 1;
            rec(shape, filled, counts, next + 1, k, out);
            counts[r] -= 1;
            filled[r].pop();
        }
    }
    let k = shape.weight();
    let mut filled: Vec<Vec<usize>> = shape.parts().iter().map(|_| Vec::new()).collect();
    let mut counts = vec![0usize; shape.height()];
    let mut out = Vec::new();
    rec(shape.parts(), &mut filled, &mut counts, 1, k, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Number of standard tableaux of the given shape.
pub fn dim_of(shape: &Partition) -> usize {
    standard_tableaux(shape).len()
}

/// Contents `q^(2(c - r))` of the boxes of `t` in filling order.
pub fn contents(t: &StandardTableau) -> Vec<LaurentRational> {
    (1..=t.weight())
        .map(|i| LaurentRational::q_pow(2 * t.content_exp(i)))
        .collect()
}

// ---- q-symmetrizers and q-antisymmetrizers ----

/// `S^(k)` on k tensor factors, by the recurrence
/// `S^(k) = (1/k_q) S^(k-1)_{2..k} (q^(1-k) I + (k-1)_q R_12) S^(k-1)_{2..k}`.
pub fn symmetrizer_of(r: &QMatrix, k: usize) -> QMatrix {
    sym_like(r, k, false)
}

/// `A^(k)` on k tensor factors, by the recurrence with
/// `(q^(k-1) I - (k-1)_q R_12)` in the middle.
pub fn antisymmetrizer_of(r: &QMatrix, k: usize) -> QMatrix {
    sym_like(r, k, true)
}

fn sym_like(r: &QMatrix, k: usize, anti: bool) -> QMatrix {
    assert!(k >= 1);
    let n = r.row_shape()[0];
    let mut acc = QMatrix::identity(vec![n]);
    for kk in 2..=k {
        let prev = acc.embed_at(2, kk, n).expect("embed in range");
        let r1 = r.embed_at(1, kk, n).expect("embed in range");
        let kq_inv = LaurentRational::q_int(kk as u32)
            .inverse()
            .expect("k_q nonzero");
        let km1 = LaurentRational::q_int(kk as u32 - 1);
        let mid = if anti {
            QMatrix::identity(vec![n; kk])
                .scale(&LaurentRational::q_pow(kk as i64 - 1))
                .sub(&r1.scale(&km1))
        } else {
            QMatrix::identity(vec![n; kk])
                .scale(&LaurentRational::q_pow(1 - kk as i64))
                .add(&r1.scale(&km1))
        };
        acc = prev.mul(&mid).mul(&prev).scale(&kq_inv);
    }
    acc
}

/// Profile-level wrapper for the q-symmetrizer.
pub fn q_symmetrizer(profile: &RMatrixProfile, k: usize) -> QMatrix {
    symmetrizer_of(profile.r(), k)
}

/// Profile-level wrapper for the q-antisymmetrizer.
pub fn q_antisymmetrizer(profile: &RMatrixProfile, k: usize) -> QMatrix {
    antisymmetrizer_of(profile.r(), k)
}

// ---- Jucys-Murphy operators ----

/// `J_1 = I`, `J_i = R_(i-1 -> 1) R_(1 -> i-1)` on k tensor factors.
pub fn jucys_murphy_of(r: &QMatrix, i: usize, k: usize) -> QMatrix {
    assert!(i >= 1 && i <= k, "Jucys-Murphy index out of range");
    let n = r.row_shape()[0];
    if i == 1 {
        return QMatrix::identity(vec![n; k]);
    }
    let left = r_chain(r, i - 1, 1, 1, k).expect("chain in range");
    let right = r_chain(r, 1, i - 1, 1, k).expect("chain in range");
    left.mul(&right)
}

/// Profile-level wrapper, `1 <= i <= k`.
pub fn jucys_murphy(profile: &RMatrixProfile, i: usize, k: usize) -> QMatrix {
    jucys_murphy_of(profile.r(), i, k)
}

/// The whole family `J_1 .. J_k`, computed once and shared.
pub fn jm_family(r: &QMatrix, k: usize) -> Vec<QMatrix> {
    (1..=k).map(|i| jucys_murphy_of(r, i, k)).collect()
}

// ---- Young projectors ----

/// Default bound on the projector weight; n^k matrix sizes stay desk-scale
/// below it. Callers that need more go through [`young_projector_with_jm`].
pub const DEFAULT_WEIGHT_BOUND: usize = 5;

/// The Young projector `Y_t` built by Jucys-Murphy spectral interpolation:
/// for each box i of the tableau, the candidate contents are those of the
/// cells addable to the shape of entries 1..i-1, and the factor
/// `prod_{v != c_i} (J_i - v) / (c_i - v)` selects the branch of `t`.
pub fn young_projector(profile: &RMatrixProfile, t: &StandardTableau) -> QMatrix {
    let k = t.weight();
    assert!(
        k <= DEFAULT_WEIGHT_BOUND,
        "projector weight above the configured bound"
    );
    let jm = jm_family(profile.r(), k);
    young_projector_with_jm(&jm, t, profile.n())
}

/// Same as [`young_projector`] with a precomputed Jucys-Murphy family.
pub fn young_projector_with_jm(jm: &[QMatrix], t: &StandardTableau, n: usize) -> QMatrix {
    let k = t.weight();
    let mut y = QMatrix::identity(vec![n; k]);
    for i in 1..=k {
        let shape_prev = t.shape_below(i - 1);
        let c_i = t.content_exp(i);
        for (r, c) in shape_prev.addable_cells() {
            let v = c as i64 - r as i64;
            if v == c_i {
                continue;
            }
            let denom = LaurentRational::q_pow(2 * c_i) - LaurentRational::q_pow(2 * v);
            let denom_inv = denom.inverse().expect("distinct contents at generic q");
            let shifted =
                jm[i - 1].sub(&QMatrix::identity(vec![n; k]).scale(&LaurentRational::q_pow(2 * v)));
            y = y.mul(&shifted.scale(&denom_inv));
        }
    }
    y
}

/// The complete projector family for weight `k`: every standard tableau of
/// every partition of `k`, in the deterministic enumeration order.
#[derive(Clone, Debug)]
pub struct ProjectorFamily {
    pub k: usize,
    pub items: Vec<(StandardTableau, QMatrix)>,
}

impl ProjectorFamily {
    pub fn build(profile: &RMatrixProfile, k: usize) -> Self {
        let jm = jm_family(profile.r(), k);
        let mut items = Vec::new();
        for nu in partitions_of(k) {
            for t in standard_tableaux(&nu) {
                let y = young_projector_with_jm(&jm, &t, profile.n());
                items.push((t, y));
            }
        }
        ProjectorFamily { k, items }
    }

    pub fn get(&self, t: &StandardTableau) -> Option<&QMatrix> {
        self.items.iter().find(|(s, _)| s == t).map(|(_, y)| y)
    }
}

// ---- Littlewood-Richardson coefficients ----

/// All `c_{mu,nu}^sigma` for `sigma |- |mu| + |nu|`, by direct enumeration
/// of Littlewood-Richardson skew tableaux (semistandard filling of
/// `sigma/mu` with content `nu` whose reverse reading word is a lattice
/// word). Zero coefficients are omitted.
pub fn lr_coefficients(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let total = mu.weight() + nu.weight();
    let mut out = BTreeMap::new();
    for sigma in partitions_of(total) {
        if !sigma.contains(mu) {
            continue;
        }
        let c = count_lr_tableaux(&sigma, mu, nu);
        if c > 0 {
            out.insert(sigma, c);
        }
    }
    out
}

fn count_lr_tableaux(sigma: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // cells of sigma/mu in reverse reading order: rows top to bottom,
    // each row right to left
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &len) in sigma.parts().iter().enumerate() {
        let lo = mu.parts().get(r).copied().unwrap_or(0);
        for c in (lo..len).rev() {
            cells.push((r, c));
        }
    }
    if cells.len() != nu.weight() {
        return 0;
    }
    let nvals = nu.height();
    let mut grid: Vec<Vec<usize>> = sigma.parts().iter().map(|&len| vec![0; len]).collect();
    let mut counts = vec![0usize; nvals + 1];

    fn rec(
        cells: &[(usize, usize)],
        pos: usize,
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
        nu: &[usize],
        nvals: usize,
        mu: &[usize],
        total: &mut u64,
    ) {
        if pos == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[pos];
        for v in 1..=nvals {
            if counts[v] >= nu[v - 1] {
                continue;
            }
            // lattice word: at every prefix, #v <= #(v-1)
            if v > 1 && counts[v] >= counts[v - 1] {
                continue;
            }
            // rows weakly increase left to right: right neighbor filled first
            if c + 1 < grid[r].len() {
                let right = grid[r][c + 1];
                let right_in_skew = c + 1 >= mu.get(r).copied().unwrap_or(0);
                if right_in_skew && right != 0 && v > right {
                    continue;
                }
            }
            // columns strictly increase downward: the cell above is filled first
            if r > 0 && c < grid[r - 1].len() {
                let above_in_skew = c >= mu.get(r - 1).copied().unwrap_or(0);
                if above_in_skew {
                    let above = grid[r - 1][c];
                    if above != 0 && v <= above {
                        continue;
                    }
                } // a cell above inside mu imposes no constraint
            }
            grid[r][c] = v;
            counts[v] += 1;
            rec(cells, pos + 1, grid, counts, nu, nvals, mu, total);
            counts[v] -= 1;
            grid[r][c] = 0;
        }
    }

    let mut total = 0u64;
    rec(
        &cells,
        0,
        &mut grid,
        &mut counts,
        nu.parts(),
        nvals,
        mu.parts(),
        &mut total,
    );
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn partitions_enumeration_order() {
        assert_eq!(partitions_of(1), vec![pt(&[1])]);
        assert_eq!(partitions_of(2), vec![pt(&[2]), pt(&[1, 1])]);
        assert_eq!(
            partitions_of(4),
            vec![
                pt(&[4]),
                pt(&[3, 1]),
                pt(&[2, 2]),
                pt(&[2, 1, 1]),
                pt(&[1, 1, 1, 1])
            ]
        );
        // (4,3,1,1) has weight 9, not 4
        assert!(!partitions_of(4).contains(&pt(&[4, 3, 1, 1])));
    }

    #[test]
    fn tableau_counts() {
        assert_eq!(standard_tableaux(&pt(&[2])).len(), 1);
        assert_eq!(standard_tableaux(&pt(&[2, 1])).len(), 2);
        // hook length formula: 4!/(3*2*2*1) = 2
        assert_eq!(standard_tableaux(&pt(&[2, 2])).len(), 2);
        assert_eq!(standard_tableaux(&pt(&[3, 2])).len(), 5);
    }

    #[test]
    fn tableau_entries_are_standard() {
        for t in standard_tableaux(&pt(&[3, 2, 1])) {
            for (r, row) in t.rows().iter().enumerate() {
                for (c, &e) in row.iter().enumerate() {
                    if c > 0 {
                        assert!(row[c - 1] < e);
                    }
                    if r > 0 {
                        assert!(t.rows()[r - 1][c] < e);
                    }
                }
            }
        }
    }

    #[test]
    fn contents_of_paper_diagram() {
        // shape (4,3,1,1) with the row-reading filling; contents as the
        // displayed diagram: row 1: 1, q^2, q^4, q^6; row 2: q^-2, 1, q^2;
        // row 3: q^-4; row 4: q^-6
        let t = StandardTableau {
            rows: vec![vec![1, 2, 3, 4], vec![5, 6, 7], vec![8], vec![9]],
        };
        let cs = contents(&t);
        let expect: Vec<LaurentRational> = [0i64, 2, 4, 6, -2, 0, 2, -4, -6]
            .iter()
            .map(|&e| LaurentRational::q_pow(e))
            .collect();
        assert_eq!(cs, expect);
    }

    #[test]
    fn contents_trivial_shapes() {
        let t1 = &standard_tableaux(&pt(&[1]))[0];
        assert_eq!(contents(t1), vec![LaurentRational::one()]);
        let tk = &standard_tableaux(&pt(&[4]))[0];
        let expect: Vec<LaurentRational> = (0..4).map(|j| LaurentRational::q_pow(2 * j)).collect();
        assert_eq!(contents(tk), expect);
    }

    #[test]
    fn lr_pieri_cases() {
        let m = lr_coefficients(&pt(&[1]), &pt(&[1]));
        assert_eq!(m.len(), 2);
        assert_eq!(m[&pt(&[2])], 1);
        assert_eq!(m[&pt(&[1, 1])], 1);

        let m2 = lr_coefficients(&pt(&[2]), &pt(&[1]));
        assert_eq!(m2.len(), 2);
        assert_eq!(m2[&pt(&[3])], 1);
        assert_eq!(m2[&pt(&[2, 1])], 1);
    }

    #[test]
    fn lr_multiplicity_two() {
        let m = lr_coefficients(&pt(&[2, 1]), &pt(&[2, 1]));
        assert_eq!(m[&pt(&[3, 2, 1])], 2);
    }

    #[test]
    fn lr_symmetry_and_dimension_identity() {
        let shapes = [pt(&[2]), pt(&[1, 1]), pt(&[2, 1]), pt(&[3])];
        for mu in &shapes {
            for nu in &shapes {
                let ab = lr_coefficients(mu, nu);
                let ba = lr_coefficients(nu, mu);
                assert_eq!(ab, ba);
                // sum_sigma c * f^sigma = f^mu f^nu * C(k, |mu|)
                let k = mu.weight() + nu.weight();
                let lhs: u64 = ab.iter().map(|(s, c)| c * dim_of(s) as u64).sum();
                let rhs = (dim_of(mu) * dim_of(nu)) as u64 * binom(k, mu.weight());
                assert_eq!(lhs, rhs);
            }
        }
    }

    fn binom(n: usize, k: usize) -> u64 {
        let mut acc = 1u64;
        for i in 0..k {
            acc = acc * (n - i) as u64 / (i + 1) as u64;
        }
        acc
    }

    #[test]
    fn partition_parse_display_round_trip() {
        for p in [pt(&[4, 3, 1, 1]), pt(&[1]), pt(&[2, 2])] {
            assert_eq!(Partition::parse(&p.to_string()), Some(p));
        }
        assert_eq!(Partition::parse("(1,2)"), None);
    }

    // ---- operator machinery over the catalog profile ----

    use crate::rmatrix::{catalog_uq_sl2, validate_default, RMatrixProfile};
    use crate::tensor::{rank_exact, QMatrix};

    fn profile() -> RMatrixProfile {
        validate_default(&catalog_uq_sl2()).unwrap()
    }

    fn lr(s: &str) -> LaurentRational {
        LaurentRational::parse(s).unwrap()
    }

    #[test]
    fn symmetrizer_base_and_rank() {
        let prof = profile();
        assert_eq!(q_symmetrizer(&prof, 1), QMatrix::identity(vec![2]));
        assert_eq!(q_antisymmetrizer(&prof, 1), QMatrix::identity(vec![2]));
        let s2 = q_symmetrizer(&prof, 2);
        assert_eq!(s2.mul(&s2), s2);
        assert_eq!(rank_exact(&s2), 3);
        let a2 = q_antisymmetrizer(&prof, 2);
        assert_eq!(a2.mul(&a2), a2);
        assert_eq!(rank_exact(&a2), 1);
        assert!(q_antisymmetrizer(&prof, 3).is_zero());
    }

    #[test]
    fn symmetrizer_absorbs_r() {
        // R_i S^(k) = q S^(k) = S^(k) R_i and the antisymmetric analog with
        // -q^-1, for k = 3
        let prof = profile();
        let s3 = q_symmetrizer(&prof, 3);
        let a3_n3 = {
            let p3 = validate_default(&crate::rmatrix::catalog_standard_hecke(3)).unwrap();
            q_antisymmetrizer(&p3, 2)
        };
        for i in 1..=2 {
            let ri = prof.r().embed_at(i, 3, 2).unwrap();
            assert_eq!(ri.mul(&s3), s3.scale(&lr("q")));
            assert_eq!(s3.mul(&ri), s3.scale(&lr("q")));
        }
        // antisymmetrizer on the n = 3 catalog where it is nonzero
        let p3 = validate_default(&crate::rmatrix::catalog_standard_hecke(3)).unwrap();
        let r1 = p3.r().embed_at(1, 2, 3).unwrap();
        assert_eq!(r1.mul(&a3_n3), a3_n3.scale(&lr("-q^-1")));
        assert_eq!(a3_n3.mul(&r1), a3_n3.scale(&lr("-q^-1")));
    }

    #[test]
    fn b_trace_of_symmetrizer_recurrence() {
        // Tr_(1) B_1 S^(k) = q^-p ((p+k-1)_q / k_q) S^(k-1)
        let prof = profile();
        let p = prof.p();
        for k in 2..=3usize {
            let s = q_symmetrizer(&prof, k);
            let b1 = prof.b().clone().embed_at(1, k, 2).unwrap();
            let traced = b1.mul(&s).partial_trace(1).unwrap();
            let coeff = (&LaurentRational::q_pow(-(p as i64))
                * &LaurentRational::q_int((p + k - 1) as u32))
                / LaurentRational::q_int(k as u32);
            assert_eq!(traced, q_symmetrizer(&prof, k - 1).scale(&coeff));
        }
    }

    #[test]
    fn b_trace_of_antisymmetrizer() {
        // Tr_(1) B_1 A^(p) = (1/(q^p p_q)) A^(p-1), at p = 2 and p = 3
        for n in [2usize, 3] {
            let r = if n == 2 {
                catalog_uq_sl2()
            } else {
                crate::rmatrix::catalog_standard_hecke(3)
            };
            let prof = validate_default(&r).unwrap();
            let p = prof.p();
            let a = q_antisymmetrizer(&prof, p);
            let b1 = prof.b().clone().embed_at(1, p, n).unwrap();
            let traced = b1.mul(&a).partial_trace(1).unwrap();
            let coeff = (&LaurentRational::q_pow(-(p as i64)) * &LaurentRational::one())
                / LaurentRational::q_int(p as u32);
            assert_eq!(traced, q_antisymmetrizer(&prof, p - 1).scale(&coeff));
        }
    }

    #[test]
    fn symmetrizer_jucys_murphy_recurrence() {
        // S^(k+1) = S^(k) (J_(k+1) - q^-2) / (q^2k - q^-2)
        let prof = profile();
        for k in 1..=2usize {
            let s_k = q_symmetrizer(&prof, k).embed_at(1, k + 1, 2).unwrap();
            let j = jucys_murphy(&prof, k + 1, k + 1);
            let shift = j.sub(&QMatrix::identity(vec![2; k + 1]).scale(&lr("q^-2")));
            let denom = LaurentRational::q_pow(2 * k as i64) - lr("q^-2");
            let rhs = s_k.mul(&shift).scale(&denom.inverse().unwrap());
            assert_eq!(q_symmetrizer(&prof, k + 1), rhs);
        }
    }

    #[test]
    fn symmetrizer_eats_last_jucys_murphy() {
        // S^(k+1) J_(k+1) = q^2k S^(k+1)
        let prof = profile();
        for k in 1..=2usize {
            let s = q_symmetrizer(&prof, k + 1);
            let j = jucys_murphy(&prof, k + 1, k + 1);
            assert_eq!(s.mul(&j), s.scale(&LaurentRational::q_pow(2 * k as i64)));
        }
    }

    #[test]
    fn quantum_trace_of_symmetrizer() {
        // Tr_q over the last factor: q^-p ((p+k)_q / (k+1)_q) S^(k)
        let prof = profile();
        let p = prof.p();
        for k in 1..=2usize {
            let s = q_symmetrizer(&prof, k + 1);
            let c_last = prof.c().clone().embed_at(k + 1, k + 1, 2).unwrap();
            let traced = c_last.mul(&s).partial_trace(k + 1).unwrap();
            let coeff = (&LaurentRational::q_pow(-(p as i64))
                * &LaurentRational::q_int((p + k) as u32))
                / LaurentRational::q_int(k as u32 + 1);
            assert_eq!(traced, q_symmetrizer(&prof, k).scale(&coeff));
        }
    }

    #[test]
    fn jucys_murphy_base_cases() {
        let prof = profile();
        assert_eq!(jucys_murphy(&prof, 1, 3), QMatrix::identity(vec![2; 3]));
        // J_2 on two factors is R^2
        assert_eq!(jucys_murphy(&prof, 2, 2), prof.r().mul(prof.r()));
    }

    #[test]
    fn jucys_murphy_family_commutes() {
        let prof = profile();
        let jm = jm_family(prof.r(), 4);
        for a in &jm {
            for b in &jm {
                assert_eq!(a.mul(b), b.mul(a));
            }
        }
    }

    #[test]
    fn projector_row_and_column_specialize() {
        let prof = profile();
        for k in 2..=3usize {
            let row = &standard_tableaux(&Partition::single_row(k))[0];
            assert_eq!(young_projector(&prof, row), q_symmetrizer(&prof, k));
            let col = &standard_tableaux(&Partition::single_column(k))[0];
            assert_eq!(young_projector(&prof, col), q_antisymmetrizer(&prof, k));
        }
    }

    #[test]
    fn projector_family_orthogonal_complete() {
        let prof = profile();
        let k = 3;
        let fam = ProjectorFamily::build(&prof, k);
        let mut sum = QMatrix::zeros(vec![2; k], vec![2; k]);
        for (i, (_, yi)) in fam.items.iter().enumerate() {
            sum = sum.add(yi);
            for (j, (_, yj)) in fam.items.iter().enumerate() {
                let prod = yi.mul(yj);
                if i == j {
                    assert_eq!(prod, yi.clone());
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
        assert_eq!(sum, QMatrix::identity(vec![2; k]));
    }

    #[test]
    fn projector_jucys_murphy_eigenvalues() {
        let prof = profile();
        let k = 3;
        let jm = jm_family(prof.r(), k);
        for nu in partitions_of(k) {
            for t in standard_tableaux(&nu) {
                let y = young_projector(&prof, &t);
                for i in 1..=k {
                    let c = LaurentRational::q_pow(2 * t.content_exp(i));
                    assert_eq!(jm[i - 1].mul(&y), y.scale(&c));
                    assert_eq!(y.mul(&jm[i - 1]), y.scale(&c));
                }
            }
        }
    }

    #[test]
    fn antisymmetrizer_below_top_has_rank_n() {
        // dim V_[p-1] = dim V = n, checked at p = 2 and p = 3
        for n in [2usize, 3] {
            let r = if n == 2 {
                catalog_uq_sl2()
            } else {
                crate::rmatrix::catalog_standard_hecke(3)
            };
            let prof = validate_default(&r).unwrap();
            let a = q_antisymmetrizer(&prof, prof.p() - 1);
            assert_eq!(rank_exact(&a), n);
        }
    }

    #[test]
    fn dimension_bookkeeping() {
        // sum over nu of dim[nu] * rank(Y_nu) = n^k, one tableau per shape
        let prof = profile();
        for k in 1..=3usize {
            let mut total = 0usize;
            for nu in partitions_of(k) {
                let ts = standard_tableaux(&nu);
                let y = young_projector(&prof, &ts[0]);
                total += ts.len() * rank_exact(&y);
            }
            assert_eq!(total, 2usize.pow(k as u32));
        }
    }
}
