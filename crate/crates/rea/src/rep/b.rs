//! B-type representations: the fundamental module built from the matrix B,
//! its tensor powers, Young projections, and the closed-form characters of
//! the central elements in single-row, single-column and general shapes.

use super::{Flavor, RepError, RepFamily, RepMeta, RepType, ShapeClass};
use crate::hecke::{q_symmetrizer, young_projector, Partition, StandardTableau};
use crate::rmatrix::RMatrixProfile;
use crate::scalar::LaurentRational;
use crate::tensor::{r_chain_from, rank_exact, QMatrix};

/// The transposed fundamental composite `P_(1,k+1) B_(k+1)` on k module
/// factors plus the auxiliary factor.
fn seed_block(profile: &RMatrixProfile, k: usize) -> QMatrix {
    let n = profile.n();
    let total = k + 1;
    let perm = QMatrix::permutation(n)
        .embed_at_positions(&[1, total], total, n)
        .expect("embed");
    let b_last = profile
        .b()
        .clone()
        .embed_at(total, total, n)
        .expect("embed");
    perm.mul(&b_last)
}

/// The fundamental module of B type: `pi(l_i^j) e_k = e_i B_k^j`, stored as
/// the transposed composite `P_12 B_2`. Irreducibility is certified by the
/// generator matrices spanning all of End(V).
pub fn fundamental_b(profile: &RMatrixProfile) -> RepFamily {
    let n = profile.n();
    let block = seed_block(profile, 1).reshaped(vec![n, n], vec![n, n]);
    let rep = RepFamily {
        aux_dim: n,
        module_dim: n,
        block,
        transposed_storage: true,
        flavor: Flavor::MRea,
        projector: None,
        meta: RepMeta {
            k: 1,
            tableau: None,
            rep_type: RepType::B,
            provenance: "fundamental B".into(),
        },
    };
    // operator span must be all of End(V)
    let nn = n * n;
    let span = QMatrix::from_fn(vec![nn], vec![nn], |gen, flat| {
        let (i, j) = (gen / n, gen % n);
        let m = rep.generator_matrix(i, j);
        m.at(flat / n, flat % n).clone()
    });
    assert_eq!(
        rank_exact(&span),
        nn,
        "fundamental generators must span End(V)"
    );
    rep
}

/// The chain sum `Z_k = I + sum_{s=1}^{k-1} Rinv_(s->1) Rinv_(1->s)` on the
/// k module factors.
pub fn chain_sum_zk(profile: &RMatrixProfile, k: usize) -> QMatrix {
    let n = profile.n();
    let mut acc = QMatrix::identity(vec![n; k]);
    for s in 1..k {
        let left = r_chain_from(profile.r_inv(), s, 1, k).expect("chain");
        let right = r_chain_from(profile.r_inv(), 1, s, k).expect("chain");
        acc = acc.add(&left.mul(&right));
    }
    acc
}

/// The k-th tensor power of the fundamental B module: the transposed
/// composite is the seed placed on factor 1 plus its conjugates by inverse
/// R-chains,
/// `sum_{s=0}^{k-1} Rinv_(s->1) [P_(1,k+1) B_(k+1)] Rinv_(1->s)`.
pub fn tensor_power_b(profile: &RMatrixProfile, k: usize) -> RepFamily {
    assert!(k >= 1);
    let n = profile.n();
    let total = k + 1;
    let seed = seed_block(profile, k);
    let mut acc = seed.clone();
    for s in 1..k {
        // chains act on the module factors only, never on the auxiliary one
        let left = r_chain_from(profile.r_inv(), s, 1, total).expect("chain");
        let right = r_chain_from(profile.r_inv(), 1, s, total).expect("chain");
        acc = acc.add(&left.mul(&seed).mul(&right));
    }
    let nmod = n.pow(k as u32);
    RepFamily {
        aux_dim: n,
        module_dim: nmod,
        block: acc.reshaped(vec![nmod, n], vec![nmod, n]),
        transposed_storage: true,
        flavor: Flavor::MRea,
        projector: None,
        meta: RepMeta {
            k,
            tableau: None,
            rep_type: RepType::B,
            provenance: format!("B tensor power k={k}"),
        },
    }
}

/// Project a tensor power onto the Young component of tableau `t`: the
/// stored composite becomes `Y block Y` in the module space, the auxiliary
/// space untouched.
pub fn project_b(
    profile: &RMatrixProfile,
    rep: &RepFamily,
    t: &StandardTableau,
) -> Result<RepFamily, RepError> {
    let y = young_projector(profile, t);
    project_b_with(rep, t, &y)
}

/// Same with a precomputed projector (for callers iterating a family).
pub fn project_b_with(
    rep: &RepFamily,
    t: &StandardTableau,
    y: &QMatrix,
) -> Result<RepFamily, RepError> {
    if t.weight() != rep.meta.k || rep.meta.rep_type != RepType::B {
        return Err(RepError::WeightMismatch);
    }
    let n = rep.aux_dim;
    let nmod = rep.module_dim;
    let y_flat = y.clone().reshaped(vec![nmod], vec![nmod]);
    let y_unit = y_flat.kron(&QMatrix::identity(vec![n]));
    let block = y_unit.mul(&rep.block).mul(&y_unit);
    Ok(RepFamily {
        aux_dim: n,
        module_dim: nmod,
        block,
        transposed_storage: true,
        flavor: rep.flavor,
        projector: Some(y_flat),
        meta: RepMeta {
            k: rep.meta.k,
            tableau: Some(t.clone()),
            rep_type: RepType::B,
            provenance: format!("{} projected to {}", rep.meta.provenance, t.shape()),
        },
    })
}

/// The simplified single-row form: `q^(1-k) k_q S^(k) [seed] S^(k)`.
pub fn row_projected_closed_form(profile: &RMatrixProfile, k: usize) -> QMatrix {
    let n = profile.n();
    let s = q_symmetrizer(profile, k)
        .reshaped(vec![n.pow(k as u32)], vec![n.pow(k as u32)])
        .kron(&QMatrix::identity(vec![n]));
    let coeff = &LaurentRational::q_pow(1 - k as i64) * &LaurentRational::q_int(k as u32);
    let nmod = n.pow(k as u32);
    let seed = seed_block(profile, k).reshaped(vec![nmod, n], vec![nmod, n]);
    s.mul(&seed).mul(&s).scale(&coeff)
}

/// The simplified single-column form: `q^(k-1) k_q A^(k) [seed] A^(k)`.
pub fn col_projected_closed_form(profile: &RMatrixProfile, k: usize) -> QMatrix {
    let n = profile.n();
    let a = crate::hecke::q_antisymmetrizer(profile, k)
        .reshaped(vec![n.pow(k as u32)], vec![n.pow(k as u32)])
        .kron(&QMatrix::identity(vec![n]));
    let coeff = &LaurentRational::q_pow(k as i64 - 1) * &LaurentRational::q_int(k as u32);
    let nmod = n.pow(k as u32);
    let seed = seed_block(profile, k).reshaped(vec![nmod, n], vec![nmod, n]);
    a.mul(&seed).mul(&a).scale(&coeff)
}

// ---- closed-form characters ----

/// `chi_(k)(s_m) = q^(-m(p+k-1)-p) k_q (p+k-1)_q^(m-1)` (single row).
pub fn char_b_row(k: usize, m: usize, p: usize) -> LaurentRational {
    assert!(k >= 1 && m >= 1);
    let (k_i, m_i, p_i) = (k as i64, m as i64, p as i64);
    let pre = LaurentRational::q_pow(-m_i * (p_i + k_i - 1) - p_i);
    let kq = LaurentRational::q_int(k as u32);
    let base = LaurentRational::q_int((p + k - 1) as u32);
    &(&pre * &kq) * &base.pow(m_i - 1)
}

/// `chi_[k](s_m) = q^(-m(p-k+1)-p) k_q (p-k+1)_q^(m-1)` (single column,
/// requires `k <= p`).
pub fn char_b_col(k: usize, m: usize, p: usize) -> Result<LaurentRational, RepError> {
    if k > p {
        return Err(RepError::ColumnTooTall);
    }
    assert!(k >= 1 && m >= 1);
    let (k_i, m_i, p_i) = (k as i64, m as i64, p as i64);
    let pre = LaurentRational::q_pow(-m_i * (p_i - k_i + 1) - p_i);
    let kq = LaurentRational::q_int(k as u32);
    let base = LaurentRational::q_int((p - k + 1) as u32);
    Ok(&(&pre * &kq) * &base.pow(m_i - 1))
}

/// Spectrum of `s_1 = Tr_q L` on the shape-`nu` component:
/// `q^(-2p) sum_r q^(2r-1-nu_r) (nu_r)_q`. Equals `q^(-2p)` times the sum of
/// inverse contents over any tableau of `nu`.
pub fn char_b_s1(nu: &Partition, p: usize) -> LaurentRational {
    let mut sum = LaurentRational::zero();
    for (r0, &part) in nu.parts().iter().enumerate() {
        let r = (r0 + 1) as i64;
        let term =
            &LaurentRational::q_pow(2 * r - 1 - part as i64) * &LaurentRational::q_int(part as u32);
        sum = &sum + &term;
    }
    &LaurentRational::q_pow(-2 * p as i64) * &sum
}

/// The sl-reduction normalization of the fundamental module in closed form:
/// `w = q^(1-p)/p_q (q^(p-2)(p+1)_q - 1)`.
pub fn fundamental_sl_normalization(p: usize) -> LaurentRational {
    let pq_inv = LaurentRational::q_int(p as u32)
        .inverse()
        .expect("p_q nonzero");
    &(&LaurentRational::q_pow(1 - p as i64) * &pq_inv)
        * &(&(&LaurentRational::q_pow(p as i64 - 2) * &LaurentRational::q_int(p as u32 + 1))
            - &LaurentRational::one())
}

/// Spectrum of the sl-reduced central elements `Tr_q F^m` on single-row and
/// single-column components.
pub fn sl_char_b(
    k: usize,
    m: usize,
    p: usize,
    shape: ShapeClass,
) -> Result<LaurentRational, RepError> {
    assert!(k >= 1 && m >= 1);
    let (m_i, p_i) = (m as i64, p as i64);
    let kq = LaurentRational::q_int(k as u32);
    match shape {
        ShapeClass::Row => {
            let pm1 = LaurentRational::q_int(p as u32 - 1);
            let ppk = LaurentRational::q_int((p + k) as u32);
            let ppk1 = LaurentRational::q_int((p + k - 1) as u32);
            let pre = LaurentRational::q_pow(-p_i - m_i);
            let head = (&(&kq * &pm1) * &ppk).checked_div(&ppk1).expect("nonzero");
            let bracket = &(&pm1.pow(m_i - 1) * &ppk.pow(m_i - 1))
                + &(&LaurentRational::from_int(if m % 2 == 0 { 1 } else { -1 }) * &kq.pow(m_i - 1));
            let denom = (&(&LaurentRational::q_pow(p_i - 2) * &ppk) - &kq).pow(m_i);
            let denom_inv = denom
                .inverse()
                .map_err(|_| RepError::SingularNormalization)?;
            Ok(&(&(&pre * &head) * &bracket) * &denom_inv)
        }
        ShapeClass::Col => {
            if k > p {
                return Err(RepError::ColumnTooTall);
            }
            let pp1 = LaurentRational::q_int(p as u32 + 1);
            let pmk = LaurentRational::q_int((p - k) as u32);
            let pmk1 = LaurentRational::q_int((p - k + 1) as u32);
            let pre = LaurentRational::q_pow(-p_i + m_i);
            let head = (&(&kq * &pp1) * &pmk).checked_div(&pmk1).expect("nonzero");
            let bracket = &(&pp1.pow(m_i - 1) * &pmk.pow(m_i - 1))
                + &(&LaurentRational::from_int(if m % 2 == 0 { 1 } else { -1 }) * &kq.pow(m_i - 1));
            let denom = (&(&LaurentRational::q_pow(p_i + 2) * &pmk) + &kq).pow(m_i);
            let denom_inv = denom
                .inverse()
                .map_err(|_| RepError::SingularNormalization)?;
            Ok(&(&(&pre * &head) * &bracket) * &denom_inv)
        }
    }
}
