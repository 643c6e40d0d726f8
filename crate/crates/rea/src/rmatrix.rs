//! R-matrix catalog, validation pipeline, and derived data.
//!
//! [`validate`] ingests an n^2 x n^2 matrix over the scalar field and runs
//! the full battery of checks: Yang-Baxter, the Hecke condition,
//! skew-invertibility, the symmetry rank, and the trace identities tying
//! together R, its skew-inverse Psi and the matrices B and C. The resulting
//! [`RMatrixProfile`] is the single trusted artifact that every
//! representation builder consumes.

use crate::hecke::antisymmetrizer_of;
use crate::scalar::LaurentRational;
use crate::tensor::{rank_exact, solve_linear, QMatrix};
use std::fmt;

/// Outcome of one named validation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: &'static str,
    pub passed: bool,
}

/// Validation failure: which check broke, with the full flag record.
#[derive(Clone, Debug)]
pub struct ProfileError {
    pub failed: &'static str,
    pub checks: Vec<CheckRecord>,
}

impl fmt::Display for ProfileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R-matrix validation failed at check '{}'", self.failed)
    }
}

impl std::error::Error for ProfileError {}

/// A validated R-matrix bundle: R, its skew-inverse Psi, the matrices B and
/// C, the symmetry rank p, and the record of passed checks.
///
/// Construction goes through [`validate`]; a profile in hand means every
/// mandatory check passed.
#[derive(Clone, Debug)]
pub struct RMatrixProfile {
    n: usize,
    r: QMatrix,
    r_inv: QMatrix,
    psi: QMatrix,
    b: QMatrix,
    c: QMatrix,
    p: usize,
    checks: Vec<CheckRecord>,
}

impl RMatrixProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> &QMatrix {
        &self.r
    }

    pub fn r_inv(&self) -> &QMatrix {
        &self.r_inv
    }

    pub fn psi(&self) -> &QMatrix {
        &self.psi
    }

    pub fn b(&self) -> &QMatrix {
        &self.b
    }

    pub fn c(&self) -> &QMatrix {
        &self.c
    }

    /// The symmetry rank p: rank A^(p) = 1 and A^(p+1) = 0.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn checks(&self) -> &[CheckRecord] {
        &self.checks
    }

    /// Trace of B (equal to that of C): `p_q / q^p`.
    pub fn trace_c(&self) -> LaurentRational {
        self.c.trace()
    }
}

// ---- catalog ----

/// The U_q(sl2) R-matrix (n = 2): rows `[q,0,0,0], [0,l,1,0], [0,1,0,0],
/// [0,0,0,q]` with `l = q - q^-1`.
pub fn catalog_uq_sl2() -> QMatrix {
    QMatrix::from_str_rows(&[
        vec!["q", "0", "0", "0"],
        vec!["0", "q - q^-1", "1", "0"],
        vec!["0", "1", "0", "0"],
        vec!["0", "0", "0", "q"],
    ])
    .reshaped(vec![2, 2], vec![2, 2])
}

/// The standard n^2 x n^2 Hecke R-matrix of the Drinfeld-Jimbo family:
/// `q E_ii (x) E_ii + sum_{i != j} E_ij (x) E_ji + l sum_{i < j} E_ii (x) E_jj`.
/// Reproduces [`catalog_uq_sl2`] at n = 2.
pub fn catalog_standard_hecke(n: usize) -> QMatrix {
    assert!(n >= 2, "catalog requires n >= 2");
    let q = LaurentRational::q();
    let lambda = LaurentRational::lambda();
    let one = LaurentRational::one();
    let mut m = QMatrix::zeros(vec![n, n], vec![n, n]);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                // q E_ii (x) E_ii: entry [(i,i),(i,i)]
                m.set(i * n + i, i * n + i, q.clone());
            } else {
                // E_ij (x) E_ji: entry [(i,j),(j,i)]
                m.set(i * n + j, j * n + i, one.clone());
                if i < j {
                    // l E_ii (x) E_jj: entry [(i,j),(i,j)]
                    m.set(i * n + j, i * n + j, lambda.clone());
                }
            }
        }
    }
    m
}

// ---- individual checks ----

/// `R_12 R_23 R_12 = R_23 R_12 R_23` exactly on three factors.
pub fn check_yang_baxter(r: &QMatrix) -> bool {
    let n = r.row_shape()[0];
    let r1 = r.embed_at(1, 3, n).expect("embed");
    let r2 = r.embed_at(2, 3, n).expect("embed");
    r1.mul(&r2).mul(&r1) == r2.mul(&r1).mul(&r2)
}

/// `(R - q I)(R + q^-1 I) = 0` exactly.
pub fn check_hecke(r: &QMatrix) -> bool {
    let id = QMatrix::identity(r.row_shape().to_vec());
    let a = r.sub(&id.scale(&LaurentRational::q()));
    let b = r.add(&id.scale(&LaurentRational::q_pow(-1)));
    a.mul(&b).is_zero()
}

/// The unique skew-inverse Psi with
/// `sum_{a,b} R_ia^jb Psi_bk^as = d_i^s d_k^j`, or `None` when the defining
/// n^4 linear system is singular. Both equalities of the closedness
/// condition `Tr_(2) R_12 Psi_23 = P_13 = Tr_(2) Psi_12 R_23` are
/// re-verified on the result.
pub fn skew_inverse(r: &QMatrix) -> Option<QMatrix> {
    let n = r.row_shape()[0];
    let nn = n * n;
    // realign: M[(i,j),(a,b)] = R[(i,a),(j,b)], unknown X[(a,b),(s,k)] =
    // Psi[(b,k),(a,s)], rhs: identity on the (i,j) pairing
    let m = QMatrix::from_fn(vec![nn], vec![nn], |row, col| {
        let (i, j) = (row / n, row % n);
        let (a, b) = (col / n, col % n);
        r.at(i * n + a, j * n + b).clone()
    });
    if rank_exact(&m) != nn {
        return None;
    }
    let x = solve_linear(&m, &QMatrix::identity(vec![nn]))?;
    let mut psi = QMatrix::zeros(vec![n, n], vec![n, n]);
    for a in 0..n {
        for b in 0..n {
            for s in 0..n {
                for k in 0..n {
                    psi.set(b * n + k, a * n + s, x.at(a * n + b, s * n + k).clone());
                }
            }
        }
    }
    if !check_closed(r, &psi) {
        return None;
    }
    Some(psi)
}

/// Both partial-trace identities defining skew-invertibility.
pub fn check_closed(r: &QMatrix, psi: &QMatrix) -> bool {
    let n = r.row_shape()[0];
    let r12 = r.embed_at(1, 3, n).expect("embed");
    let psi23 = psi.embed_at(2, 3, n).expect("embed");
    // after tracing out the middle factor both sides act on factors (1, 3)
    let lhs = r12.mul(&psi23).partial_trace(2).expect("trace");
    let p = QMatrix::permutation(n);
    if lhs != p {
        return false;
    }
    let psi12 = psi.embed_at(1, 3, n).expect("embed");
    let r23 = r.embed_at(2, 3, n).expect("embed");
    let rhs = psi12.mul(&r23).partial_trace(2).expect("trace");
    rhs == p
}

/// `B_1 = Tr_(2) Psi_21` — the skew-inverse with both factors swapped.
pub fn b_matrix(psi: &QMatrix) -> QMatrix {
    let n = psi.row_shape()[0];
    let p = QMatrix::permutation(n);
    p.mul(psi).mul(&p).partial_trace(2).expect("trace")
}

/// `C_1 = Tr_(2) Psi_12`.
pub fn c_matrix(psi: &QMatrix) -> QMatrix {
    psi.partial_trace(2).expect("trace")
}

/// Builds `A^(k)` for k = 1, 2, ... and returns the first p with
/// `rank A^(p) = 1` and `A^(p+1) = 0`, or `None` if no such p is found by
/// `k_max`. Requires the Hecke condition (the recurrence presumes it).
pub fn symmetry_rank(r: &QMatrix, k_max: usize) -> Option<usize> {
    for p in 1..=k_max {
        let a_p = antisymmetrizer_of(r, p);
        if a_p.is_zero() {
            return None; // vanished before ever reaching rank one
        }
        if rank_exact(&a_p) == 1 && antisymmetrizer_of(r, p + 1).is_zero() {
            return Some(p);
        }
    }
    None
}

// ---- full validation ----

/// Default antisymmetrizer search bound.
pub const DEFAULT_K_MAX: usize = 6;

/// Run every check, compute Psi, B, C and the symmetry rank, and assemble
/// the profile. Any failed check aborts with the failing check name; the
/// mandatory gate (Yang-Baxter, Hecke, skew-invertibility, finite symmetry
/// rank) comes first, the derived identities after.
pub fn validate(r: &QMatrix, k_max: usize) -> Result<RMatrixProfile, ProfileError> {
    let n = r.row_shape()[0];
    assert_eq!(r.row_shape(), &[n, n], "R must act on V (x) V");
    assert_eq!(r.col_shape(), &[n, n], "R must act on V (x) V");
    let mut checks = Vec::new();
    let fail = |checks: Vec<CheckRecord>, name: &'static str| ProfileError {
        failed: name,
        checks,
    };

    let ybe = check_yang_baxter(r);
    checks.push(CheckRecord {
        name: "yang_baxter",
        passed: ybe,
    });
    if !ybe {
        return Err(fail(checks, "yang_baxter"));
    }

    let hecke = check_hecke(r);
    checks.push(CheckRecord {
        name: "hecke",
        passed: hecke,
    });
    if !hecke {
        return Err(fail(checks, "hecke"));
    }

    let psi = skew_inverse(r);
    checks.push(CheckRecord {
        name: "skew_invertible",
        passed: psi.is_some(),
    });
    let Some(psi) = psi else {
        return Err(fail(checks, "skew_invertible"));
    };

    let p = symmetry_rank(r, k_max);
    checks.push(CheckRecord {
        name: "symmetry_rank",
        passed: p.is_some(),
    });
    let Some(p) = p else {
        return Err(fail(checks, "symmetry_rank"));
    };

    let r_inv = match r.inverse() {
        Some(inv) => inv.reshaped(vec![n, n], vec![n, n]),
        None => return Err(fail(checks, "invertible")),
    };

    let b = b_matrix(&psi);
    let c = c_matrix(&psi);
    let id_n = QMatrix::identity(vec![n]);
    let id_nn = QMatrix::identity(vec![n, n]);
    let perm = QMatrix::permutation(n);

    // B C = q^(-2p) I
    let nonsing = b.mul(&c) == id_n.scale(&LaurentRational::q_pow(-2 * p as i64));
    checks.push(CheckRecord {
        name: "nonsing",
        passed: nonsing,
    });

    // Tr B = Tr C = p_q / q^p
    let pq_qp = LaurentRational::q_int(p as u32) * LaurentRational::q_pow(-(p as i64));
    let bc_norm = b.trace() == pq_qp && c.trace() == pq_qp;
    checks.push(CheckRecord {
        name: "bc_norm",
        passed: bc_norm,
    });

    // Tr_(1) B_1 R_12 = I
    let b1r = b.kron(&id_n).mul(r).partial_trace(1).expect("trace");
    let b_r = b1r == id_n;
    checks.push(CheckRecord {
        name: "b_r",
        passed: b_r,
    });

    // R_12 B_1 B_2 = B_1 B_2 R_12
    let bb = b.kron(&b);
    let rbb = r.mul(&bb) == bb.mul(r);
    checks.push(CheckRecord {
        name: "rbb",
        passed: rbb,
    });

    // q^(2p) C_1 Psi_21 B_2 = R^(-1)_12
    let psi21 = perm.mul(&psi).mul(&perm);
    let lhs = c
        .kron(&id_n)
        .mul(&psi21)
        .mul(&id_n.kron(&b))
        .scale(&LaurentRational::q_pow(2 * p as i64));
    let psi_r = lhs == r_inv;
    checks.push(CheckRecord {
        name: "psi_r",
        passed: psi_r,
    });

    // Tr_(0) B_0 R_01 R_02^(-1) = P_12 B_1 (relabeled to 1-based spaces)
    let lhs_bas = b
        .embed_at(1, 3, n)
        .expect("embed")
        .mul(&r.embed_at(1, 3, n).expect("embed"))
        .mul(&r_inv.embed_at_positions(&[1, 3], 3, n).expect("embed"))
        .partial_trace(1)
        .expect("trace");
    let rhs_bas = perm.mul(&b.kron(&id_n));
    let b_chain_trace = lhs_bas == rhs_bas;
    checks.push(CheckRecord {
        name: "b_chain_trace",
        passed: b_chain_trace,
    });

    // B_2 Psi_23 C_3 = C_3 Psi_23 B_2 (on the two factors Psi acts on)
    let b1 = b.kron(&id_n);
    let c2 = id_n.kron(&c);
    let psi_bc = b1.mul(&psi).mul(&c2) == c2.mul(&psi).mul(&b1);
    checks.push(CheckRecord {
        name: "psi_bc_commute",
        passed: psi_bc,
    });

    let _ = id_nn;
    for rec in &checks {
        if !rec.passed {
            let name = rec.name;
            return Err(ProfileError {
                failed: name,
                checks,
            });
        }
    }

    Ok(RMatrixProfile {
        n,
        r: r.clone(),
        r_inv,
        psi,
        b,
        c,
        p,
        checks,
    })
}

/// Validate with the default antisymmetrizer bound.
pub fn validate_default(r: &QMatrix) -> Result<RMatrixProfile, ProfileError> {
    validate(r, DEFAULT_K_MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::LaurentRational as LR;

    fn lr(s: &str) -> LR {
        LR::parse(s).unwrap()
    }

    #[test]
    fn catalog_entries_match_display() {
        let r = catalog_uq_sl2();
        assert_eq!(r.at(0, 0), &lr("q"));
        assert_eq!(r.at(1, 1), &lr("q - q^-1"));
        assert_eq!(r.at(1, 2), &lr("1"));
        assert_eq!(r.at(2, 1), &lr("1"));
        assert_eq!(r.at(3, 3), &lr("q"));
    }

    #[test]
    fn standard_hecke_reproduces_n2() {
        assert_eq!(catalog_standard_hecke(2), catalog_uq_sl2());
    }

    #[test]
    fn yang_baxter_checks() {
        assert!(check_yang_baxter(&catalog_uq_sl2()));
        assert!(check_yang_baxter(&catalog_standard_hecke(3)));
        assert!(check_yang_baxter(&QMatrix::permutation(2)));
        // perturb one entry and the identity must break
        let mut bad = catalog_uq_sl2();
        bad.set(0, 0, lr("q + 1"));
        assert!(!check_yang_baxter(&bad));
    }

    #[test]
    fn hecke_checks() {
        assert!(check_hecke(&catalog_uq_sl2()));
        assert!(check_hecke(&catalog_standard_hecke(3)));
        // identity: (1 - q)(1 + q^-1) != 0 symbolically
        assert!(!check_hecke(&QMatrix::identity(vec![2, 2])));
        // permutation: P^2 = I forces q = +-1
        assert!(!check_hecke(&QMatrix::permutation(2)));
    }

    #[test]
    fn skew_inverse_of_catalog() {
        let psi = skew_inverse(&catalog_uq_sl2()).unwrap();
        let b = b_matrix(&psi);
        let c = c_matrix(&psi);
        let b_expect = QMatrix::from_str_rows(&[vec!["q^-1", "0"], vec!["0", "q^-3"]]);
        let c_expect = QMatrix::from_str_rows(&[vec!["q^-3", "0"], vec!["0", "q^-1"]]);
        assert_eq!(b.clone().reshaped(vec![2], vec![2]), b_expect);
        assert_eq!(c.clone().reshaped(vec![2], vec![2]), c_expect);
    }

    #[test]
    fn skew_inverse_of_permutation_is_permutation() {
        let p = QMatrix::permutation(2);
        assert_eq!(skew_inverse(&p).unwrap(), p);
    }

    #[test]
    fn closed_identity_traces_to_permutation() {
        // Tr_(2) R_12 Psi_23 = P_13 for the catalog R, stated explicitly
        let r = catalog_uq_sl2();
        let psi = skew_inverse(&r).unwrap();
        let lhs = r
            .embed_at(1, 3, 2)
            .unwrap()
            .mul(&psi.embed_at(2, 3, 2).unwrap())
            .partial_trace(2)
            .unwrap();
        assert_eq!(lhs, QMatrix::permutation(2));
    }

    #[test]
    fn symmetry_rank_catalog() {
        assert_eq!(symmetry_rank(&catalog_uq_sl2(), 5), Some(2));
        assert_eq!(symmetry_rank(&catalog_standard_hecke(3), 5), Some(3));
    }

    #[test]
    fn symmetry_rank_exhaustion() {
        // q I is Hecke ((qI - qI)(qI + q^-1 I) = 0) but its antisymmetrizer
        // tower dies at A^(2) = 0 without ever reaching rank one
        let qi = QMatrix::identity(vec![2, 2]).scale(&lr("q"));
        assert!(check_hecke(&qi));
        assert_eq!(symmetry_rank(&qi, 5), None);
    }

    #[test]
    fn validate_catalog_n2() {
        let prof = validate_default(&catalog_uq_sl2()).unwrap();
        assert_eq!(prof.p(), 2);
        assert!(prof.checks().iter().all(|c| c.passed));
        // B C = q^-4 I
        assert_eq!(
            prof.b().mul(prof.c()),
            QMatrix::identity(vec![2]).scale(&lr("q^-4"))
        );
        // Tr B = 2_q / q^2 = q^-1 + q^-3
        assert_eq!(prof.b().trace(), lr("q^-1 + q^-3"));
    }

    #[test]
    fn validate_catalog_n3() {
        let prof = validate_default(&catalog_standard_hecke(3)).unwrap();
        assert_eq!(prof.p(), 3);
        // Tr C = 3_q / q^3
        let expect = LR::q_int(3) * LR::q_pow(-3);
        assert_eq!(prof.c().trace(), expect);
    }

    #[test]
    fn validate_rejects_non_hecke() {
        let p = QMatrix::permutation(2);
        let err = validate_default(&p).unwrap_err();
        assert_eq!(err.failed, "hecke");
    }

    #[test]
    fn symmetry_rank_invariant_under_conjugation() {
        // R -> (Q (x) Q) R (Q (x) Q)^-1 for an invertible rational Q
        let q = QMatrix::from_str_rows(&[vec!["1", "2"], vec!["3", "5"]]);
        let qq = q.kron(&q);
        let qq_inv = qq.inverse().unwrap().reshaped(vec![2, 2], vec![2, 2]);
        let conj = qq.mul(&catalog_uq_sl2()).mul(&qq_inv);
        assert!(check_hecke(&conj));
        assert_eq!(symmetry_rank(&conj, 5), Some(2));
    }
}
