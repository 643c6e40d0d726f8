//! Representation families and the machinery shared by the B- and R-type
//! builders: composite blocks, picture conversions, quantum traces,
//! sl-reduction and the renormalization automorphism.
//!
//! A representation is stored as one composite operator on
//! (module space) (x) (auxiliary space), auxiliary factor last. The entry
//! block at auxiliary index pair (i, j) is the matrix representing the
//! generator with lower index i and upper index j.
//!
//! Two storage pictures coexist, following the source formulas:
//! B-type builders store the module-space-transposed composite (that is the
//! shape the tensor-power and projection formulas take), while R-type
//! builders store the composite that acts directly. [`RepFamily::acting_block`]
//! converts either to the acting picture, which is what the relation
//! checker, quantum traces and intertwiner searches consume.

pub mod b;
pub mod r;

use crate::rmatrix::RMatrixProfile;
use crate::scalar::LaurentRational;
use crate::tensor::{rank_exact, rref, solve_linear, QMatrix};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Which quadratic relation the family satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Flavor {
    /// Zero right-hand side.
    Rea,
    /// Modified relation with the linear right-hand side.
    MRea,
    /// Modified relation plus vanishing quantum trace.
    Sl,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Flavor::Rea => write!(f, "REA"),
            Flavor::MRea => write!(f, "mREA"),
            Flavor::Sl => write!(f, "SL"),
        }
    }
}

/// B-type (built through the matrix B) or R-type (built through R-chains).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RepType {
    B,
    R,
}

/// Single-row or single-column diagram class for the closed-form characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeClass {
    Row,
    Col,
}

/// Provenance metadata carried by a family.
#[derive(Clone, Debug)]
pub struct RepMeta {
    pub k: usize,
    pub tableau: Option<crate::hecke::StandardTableau>,
    pub rep_type: RepType,
    pub provenance: String,
}

/// A finite-dimensional representation family.
#[derive(Clone, Debug)]
pub struct RepFamily {
    /// Auxiliary dimension n (the R-matrix lives on V (x) V with dim V = n).
    pub aux_dim: usize,
    /// Ambient module dimension N.
    pub module_dim: usize,
    /// Composite generator operator on (module) (x) (auxiliary), aux last,
    /// shaped `[N, n] x [N, n]`.
    pub block: QMatrix,
    /// True when `block` is the module-space-transposed composite.
    pub transposed_storage: bool,
    pub flavor: Flavor,
    /// Ambient projector (stored picture) cutting out the effective module;
    /// `None` means the whole space.
    pub projector: Option<QMatrix>,
    pub meta: RepMeta,
}

/// Errors from representation builders.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepError {
    /// The profile failed validation upstream.
    InvalidProfile,
    /// Tableau weight does not match the tensor power.
    WeightMismatch,
    /// Single-column shapes require k <= p.
    ColumnTooTall,
    /// The sl-reduction normalization factor vanished.
    SingularNormalization,
    /// A parameter that must be nonzero was zero.
    ZeroParameter,
    /// The quantum trace block is not scalar where a scalar is required.
    NotScalar,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::InvalidProfile => write!(f, "invalid R-matrix profile"),
            RepError::WeightMismatch => write!(f, "tableau weight does not match tensor power"),
            RepError::ColumnTooTall => write!(f, "single-column shape requires k <= p"),
            RepError::SingularNormalization => write!(f, "sl-reduction normalization vanishes"),
            RepError::ZeroParameter => write!(f, "parameter must be nonzero"),
            RepError::NotScalar => write!(f, "quantum trace block is not scalar"),
        }
    }
}

impl std::error::Error for RepError {}

impl RepFamily {
    /// The composite in the acting picture (column-vector convention).
    pub fn acting_block(&self) -> QMatrix {
        if self.transposed_storage {
            self.block.partial_transpose_leading(1)
        } else {
            self.block.clone()
        }
    }

    /// The module projector in the acting picture (identity when absent).
    pub fn acting_projector(&self) -> QMatrix {
        match &self.projector {
            Some(y) => {
                let y = y
                    .clone()
                    .reshaped(vec![self.module_dim], vec![self.module_dim]);
                if self.transposed_storage {
                    y.transpose()
                } else {
                    y
                }
            }
            None => QMatrix::identity(vec![self.module_dim]),
        }
    }

    /// Rank of the projector: the dimension of the effective module.
    pub fn effective_dim(&self) -> usize {
        match &self.projector {
            Some(y) => rank_exact(y),
            None => self.module_dim,
        }
    }

    /// The module-space matrix representing the generator with auxiliary
    /// index pair (i, j), in the acting picture.
    pub fn generator_matrix(&self, i: usize, j: usize) -> QMatrix {
        aux_block(&self.acting_block(), self.aux_dim, i, j)
    }

    /// Restrict to a column basis of the effective module: returns the
    /// compressed acting composite on `[d, n]` together with the basis
    /// matrix U (N x d) and its left inverse W (d x N), `U W = projector`.
    pub fn compressed(&self) -> CompressedRep {
        let x = self.acting_block();
        let pi = self.acting_projector();
        let n = self.aux_dim;
        if self.projector.is_none() {
            return CompressedRep {
                dim: self.module_dim,
                block: x,
                basis: pi.clone(),
                cobasis: pi,
            };
        }
        let (u, w) = projector_basis(&pi);
        let d = u.ncols();
        let id_aux = QMatrix::identity(vec![n]);
        let block = w.kron(&id_aux).mul(&x).mul(&u.kron(&id_aux));
        CompressedRep {
            dim: d,
            block,
            basis: u,
            cobasis: w,
        }
    }

    /// Block of `Tr_q(L^m)`: m-th power of the acting composite in the
    /// auxiliary pairing, then the trace against C.
    pub fn quantum_trace_block(&self, m: usize, c: &QMatrix) -> QMatrix {
        let x = self.acting_block();
        let xm = x.pow(m);
        quantum_trace_aux(&xm, c)
    }
}

/// A representation restricted to a basis of its effective module.
pub struct CompressedRep {
    pub dim: usize,
    /// Acting composite on `[dim, n]`.
    pub block: QMatrix,
    /// N x dim basis matrix.
    pub basis: QMatrix,
    /// dim x N left inverse of the basis.
    pub cobasis: QMatrix,
}

impl CompressedRep {
    pub fn generator_matrix(&self, n: usize, i: usize, j: usize) -> QMatrix {
        aux_block(&self.block, n, i, j)
    }
}

/// Column basis U of a projector's image plus the left inverse W with
/// `U W = pi` and `W U = I`.
pub fn projector_basis(pi: &QMatrix) -> (QMatrix, QMatrix) {
    let nn = pi.nrows();
    let (_, pivots) = rref(pi);
    let u = QMatrix::from_fn(vec![nn], vec![pivots.len()], |i, j| {
        pi.at(i, pivots[j]).clone()
    });
    let w = solve_linear(&u, pi).expect("projector columns span the image");
    (u, w)
}

/// Extract the module-space block at auxiliary index pair (i, j) from a
/// composite on `[N, n]`.
pub fn aux_block(x: &QMatrix, n: usize, i: usize, j: usize) -> QMatrix {
    let nmod = x.nrows() / n;
    QMatrix::from_fn(vec![nmod], vec![nmod], |a, bq| {
        x.at(a * n + i, bq * n + j).clone()
    })
}

/// Assemble a composite on `[N, n]` from per-auxiliary-pair module blocks.
pub fn composite_from_blocks(blocks: &[Vec<QMatrix>], n: usize) -> QMatrix {
    let nmod = blocks[0][0].nrows();
    QMatrix::from_fn(vec![nmod, n], vec![nmod, n], |row, col| {
        let (a, i) = (row / n, row % n);
        let (bq, j) = (col / n, col % n);
        blocks[i][j].at(a, bq).clone()
    })
}

/// Partial trace of `(I (x) C) X` over the (last) auxiliary factor.
pub fn quantum_trace_aux(x: &QMatrix, c: &QMatrix) -> QMatrix {
    let n = c.nrows();
    let nmod = x.nrows() / n;
    let ic = QMatrix::identity(vec![nmod]).kron(c);
    ic.mul(x)
        .reshaped(vec![nmod, n], vec![nmod, n])
        .partial_trace(2)
        .expect("aux dimensions agree")
}

/// Decide whether `m` is an exact scalar multiple of `pi` and return the
/// scalar; `None` when it is not. The scalar is read off the first nonzero
/// entry of `pi` and the difference is required to vanish identically.
pub fn scalar_multiple_of(m: &QMatrix, pi: &QMatrix) -> Option<LaurentRational> {
    let (nr, nc) = (pi.nrows(), pi.ncols());
    let mut pivot = None;
    'outer: for i in 0..nr {
        for j in 0..nc {
            if !pi.at(i, j).is_zero() {
                pivot = Some((i, j));
                break 'outer;
            }
        }
    }
    let Some((i, j)) = pivot else {
        // zero projector: the only multiple is zero
        return if m.is_zero() {
            Some(LaurentRational::zero())
        } else {
            None
        };
    };
    let s = m.at(i, j).checked_div(pi.at(i, j)).expect("pivot nonzero");
    if m.sub(&pi.scale(&s)).is_zero() {
        Some(s)
    } else {
        None
    }
}

/// The stored-picture projector composite `Y (x) I_aux` (identity when the
/// family has no projector).
fn stored_unit(rep: &RepFamily) -> QMatrix {
    let n = rep.aux_dim;
    match &rep.projector {
        Some(y) => y
            .clone()
            .reshaped(vec![rep.module_dim], vec![rep.module_dim])
            .kron(&QMatrix::identity(vec![n])),
        None => QMatrix::identity(vec![rep.module_dim, n]),
    }
}

/// The renormalization automorphism: `block -> z block + ((1-z)/lambda) unit`,
/// applied in the stored picture. The result satisfies the same relation,
/// and its sl-reduction is unchanged.
pub fn renormalize(rep: &RepFamily, z: &LaurentRational) -> Result<RepFamily, RepError> {
    if z.is_zero() {
        return Err(RepError::ZeroParameter);
    }
    if rep.flavor != Flavor::MRea {
        return Err(RepError::InvalidProfile);
    }
    let lambda_inv = LaurentRational::lambda().inverse().expect("lambda nonzero");
    let coeff = &(&LaurentRational::one() - z) * &lambda_inv;
    let block = rep.block.scale(z).add(&stored_unit(rep).scale(&coeff));
    let mut out = rep.clone();
    out.block = block;
    out.meta.provenance = format!("{} renormalized", rep.meta.provenance);
    Ok(out)
}

/// sl-reduction of an mREA family.
///
/// For a family with a scalar quantum trace (irreducible case) the block
/// becomes `(1/w)(block - (chi_1/TrC) unit)` with `w = 1 - lambda chi_1/TrC`.
/// For the unprojected B-type tensor power the same subtraction and
/// normalization happen with the operator `T = q^(-2p) Z_k` (the block of
/// `Tr_q L`, with `Z_k = I + sum_s Rinv_(s->1) Rinv_(1->s)`) in place of the
/// scalar `chi_1`; the operator normalization acts as `w_nu` on each
/// irreducible component.
pub fn sl_reduce(rep: &RepFamily, profile: &RMatrixProfile) -> Result<RepFamily, RepError> {
    if rep.flavor != Flavor::MRea {
        return Err(RepError::InvalidProfile);
    }
    let tr_c = profile.trace_c();
    let chi1 = rep.quantum_trace_block(1, profile.c());
    let pi_act = rep.acting_projector();
    if rep.projector.is_none() && rep.meta.k > 1 && rep.meta.rep_type == RepType::B {
        // Reducible tensor power: the represented ideal generator Tr_q L is
        // the operator q^(-2p) Z_k, not a scalar, so both the delta-term and
        // the normalization are operator-valued here. The normalization
        // omega = I - lambda T/TrC restricts to the scalar omega_nu on each
        // irreducible component and to the fixed scalar of the fundamental
        // at k = 1.
        let n = rep.aux_dim;
        // for the pristine power the trace block is the chain sum,
        // T = q^(-2p) Z_k; renormalized inputs shift it, which is why T is
        // read off the representation rather than rebuilt from chains
        let t = quantum_trace_aux(&rep.block, profile.c());
        let tr_c_inv = tr_c.inverse().expect("TrC nonzero");
        let c_term = t.scale(&tr_c_inv);
        let omega_op =
            QMatrix::identity(vec![rep.module_dim]).sub(&c_term.scale(&LaurentRational::lambda()));
        let omega_inv = omega_op.inverse().ok_or(RepError::SingularNormalization)?;
        let id_aux = QMatrix::identity(vec![n]);
        let block = rep
            .block
            .sub(&c_term.kron(&id_aux))
            .mul(&omega_inv.kron(&id_aux));
        let mut out = rep.clone();
        out.block = block;
        out.flavor = Flavor::Sl;
        out.meta.provenance = format!("sl-reduction of {}", rep.meta.provenance);
        return Ok(out);
    }
    // irreducible path: the quantum trace block must be a scalar multiple of
    // the module projector
    let chi = scalar_multiple_of(&chi1, &pi_act).ok_or(RepError::NotScalar)?;
    let c_over_tr = chi.checked_div(&tr_c).expect("TrC nonzero");
    let omega = &LaurentRational::one() - &(&LaurentRational::lambda() * &c_over_tr);
    if omega.is_zero() {
        return Err(RepError::SingularNormalization);
    }
    let omega_inv = omega.inverse().expect("checked nonzero");
    let block = rep
        .block
        .sub(&stored_unit(rep).scale(&c_over_tr))
        .scale(&omega_inv);
    let mut out = rep.clone();
    out.block = block;
    out.flavor = Flavor::Sl;
    out.meta.provenance = format!("sl-reduction of {}", rep.meta.provenance);
    Ok(out)
}

// ---- serialization ----

#[derive(Serialize, Deserialize)]
pub struct RepFamilyJson {
    pub aux_dim: usize,
    pub module_dim: usize,
    pub flavor: Flavor,
    pub rep_type: RepType,
    pub k: usize,
    pub tableau_rows: Option<Vec<Vec<usize>>>,
    pub transposed_storage: bool,
    pub provenance: String,
    pub block: crate::tensor::QMatrixJson,
    pub projector: Option<crate::tensor::QMatrixJson>,
}

impl RepFamily {
    pub fn to_json(&self) -> RepFamilyJson {
        RepFamilyJson {
            aux_dim: self.aux_dim,
            module_dim: self.module_dim,
            flavor: self.flavor,
            rep_type: self.meta.rep_type,
            k: self.meta.k,
            tableau_rows: self.meta.tableau.as_ref().map(|t| t.rows().to_vec()),
            transposed_storage: self.transposed_storage,
            provenance: self.meta.provenance.clone(),
            block: self.block.to_json(),
            projector: self.projector.as_ref().map(|y| y.to_json()),
        }
    }

    pub fn from_json(j: &RepFamilyJson) -> Result<Self, String> {
        let block = QMatrix::from_json(&j.block).map_err(|e| e.to_string())?;
        let projector = match &j.projector {
            Some(p) => Some(QMatrix::from_json(p).map_err(|e| e.to_string())?),
            None => None,
        };
        let tableau = match &j.tableau_rows {
            Some(rows) => Some(
                crate::hecke::StandardTableau::from_rows(rows.clone())
                    .ok_or_else(|| "tableau rows are not standard".to_string())?,
            ),
            None => None,
        };
        Ok(RepFamily {
            aux_dim: j.aux_dim,
            module_dim: j.module_dim,
            block,
            transposed_storage: j.transposed_storage,
            flavor: j.flavor,
            projector,
            meta: RepMeta {
                k: j.k,
                tableau,
                rep_type: j.rep_type,
                provenance: j.provenance.clone(),
            },
        })
    }
}
