//! Emission of the Hopf algebra presentation attached to a fiber functor,
//! and of the universal-unitary relation sets.
//!
//! Relations are emitted as data (structured terms plus a coproduct table),
//! not enforced by a normal-form engine; consistency is witnessed by
//! classical points, i.e. scalar matrix substitutions satisfying every
//! relation.

use crate::fiber::{unitary_check, FiberData};
use crate::linalg::Matrix;
use crate::scalars::Field;
use crate::Error;
use std::collections::BTreeMap;
use std::fmt;

/// Generator families: `v`, `w` for the general presentation; `u` and its
/// formal adjoint `us` for the unitary one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum GenFamily {
    V,
    W,
    U,
    Ustar,
}

impl GenFamily {
    fn prefix(self) -> &'static str {
        match self {
            GenFamily::V => "v",
            GenFamily::W => "w",
            GenFamily::U => "u",
            GenFamily::Ustar => "us",
        }
    }
}

/// A generator symbol `family_{row}_{col}`; indices are 0-based internally
/// and rendered 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GenSym {
    pub family: GenFamily,
    pub row: usize,
    pub col: usize,
}

impl GenSym {
    pub fn new(family: GenFamily, row: usize, col: usize) -> Self {
        GenSym { family, row, col }
    }
}

impl fmt::Display for GenSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}_{}", self.family.prefix(), self.row + 1, self.col + 1)
    }
}

/// One relation `sum coeff * product(gens) = rhs * 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct Relation<K: Field> {
    pub lhs: Vec<(K, Vec<GenSym>)>,
    pub rhs: K,
}

/// The coefficient data the relations were emitted from, kept so classical
/// points can be checked from the relation set alone.
#[derive(Clone, Debug)]
pub enum PresentationBasis<K: Field> {
    General { a: Matrix<K>, b: Matrix<K> },
    Unitary { aa_star: Matrix<K> },
}

/// A full presentation: generators, relations, coproduct table.
#[derive(Clone, Debug)]
pub struct RelationSet<K: Field> {
    n: usize,
    gens: Vec<GenSym>,
    relations: Vec<Relation<K>>,
    coproduct: BTreeMap<GenSym, Vec<(GenSym, GenSym)>>,
    basis: PresentationBasis<K>,
}

impl<K: Field> RelationSet<K> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[GenSym] {
        &self.gens
    }

    pub fn relations(&self) -> &[Relation<K>] {
        &self.relations
    }

    pub fn coproduct(&self) -> &BTreeMap<GenSym, Vec<(GenSym, GenSym)>> {
        &self.coproduct
    }

    pub fn basis(&self) -> &PresentationBasis<K> {
        &self.basis
    }
}

fn matrix_coproduct(
    table: &mut BTreeMap<GenSym, Vec<(GenSym, GenSym)>>,
    family: GenFamily,
    n: usize,
) {
    for i in 0..n {
        for j in 0..n {
            let gen = GenSym::new(family, i, j);
            let terms = (0..n)
                .map(|k| (GenSym::new(family, i, k), GenSym::new(family, k, j)))
                .collect();
            table.insert(gen, terms);
        }
    }
}

/// The four defining relation families of the Hopf algebra of a fiber
/// functor, with coefficients `a`, `b`, `c = A^-1`, `d = B^-1`:
///
/// 1. `sum_{i,k} a_ik v_ij w_kl = a_jl`
/// 2. `sum_{j,i} c_ji w_kj v_li = c_kl`
/// 3. `sum_{i,k} b_ik w_ij v_kl = b_jl`
/// 4. `sum_{j,i} d_ji v_kj w_li = d_kl`
///
/// plus the matrix coproduct on both generator families.
pub fn emit_relations<K: Field>(fd: &FiberData<K>) -> RelationSet<K> {
    let n = fd.n();
    let v = |i, j| GenSym::new(GenFamily::V, i, j);
    let w = |i, j| GenSym::new(GenFamily::W, i, j);

    let mut gens = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            gens.push(v(i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            gens.push(w(i, j));
        }
    }

    let mut relations = Vec::with_capacity(4 * n * n);
    let a = fd.a();
    let b = fd.b();
    let c = fd.a_inv();
    let dm = fd.b_inv();

    for j in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for i in 0..n {
                for k in 0..n {
                    if !a[(i, k)].is_zero() {
                        lhs.push((a[(i, k)].clone(), vec![v(i, j), w(k, l)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: a[(j, l)].clone(),
            });
        }
    }
    for k in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for j in 0..n {
                for i in 0..n {
                    if !c[(j, i)].is_zero() {
                        lhs.push((c[(j, i)].clone(), vec![w(k, j), v(l, i)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: c[(k, l)].clone(),
            });
        }
    }
    for j in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for i in 0..n {
                for k in 0..n {
                    if !b[(i, k)].is_zero() {
                        lhs.push((b[(i, k)].clone(), vec![w(i, j), v(k, l)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: b[(j, l)].clone(),
            });
        }
    }
    for k in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for j in 0..n {
                for i in 0..n {
                    if !dm[(j, i)].is_zero() {
                        lhs.push((dm[(j, i)].clone(), vec![v(k, j), w(l, i)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: dm[(k, l)].clone(),
            });
        }
    }

    let mut coproduct = BTreeMap::new();
    matrix_coproduct(&mut coproduct, GenFamily::V, n);
    matrix_coproduct(&mut coproduct, GenFamily::W, n);

    RelationSet {
        n,
        gens,
        relations,
        coproduct,
        basis: PresentationBasis::General {
            a: a.clone(),
            b: b.clone(),
        },
    }
}

/// The universal-unitary presentation `A_u(AA*)` on `u` with formal
/// adjoints: `u u* = 1 = u* u`, `conj(u) (AA*)^-1 tu = (AA*)^-1` and
/// `tu AA* conj(u) = AA*`; requires unitary fiber data.
pub fn emit_unitary_relations<K: Field>(fd: &FiberData<K>) -> Result<RelationSet<K>, Error> {
    unitary_check(fd)?;
    let n = fd.n();
    let u = |i, j| GenSym::new(GenFamily::U, i, j);
    let us = |i, j| GenSym::new(GenFamily::Ustar, i, j);

    let a_star = fd.a().transpose().map(|e| e.conj());
    let aa_star = fd.a().mul(&a_star)?;
    let aa_star_inv = aa_star.inverse()?;

    let mut gens = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            gens.push(u(i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            gens.push(us(i, j));
        }
    }

    let mut relations = Vec::with_capacity(4 * n * n);
    // (u u*)_{ij} = sum_k u_ik us_jk = delta_ij
    for i in 0..n {
        for j in 0..n {
            let lhs = (0..n).map(|k| (K::one(), vec![u(i, k), us(j, k)])).collect();
            relations.push(Relation {
                lhs,
                rhs: if i == j { K::one() } else { K::zero() },
            });
        }
    }
    // (u* u)_{ij} = sum_k us_ki u_kj = delta_ij
    for i in 0..n {
        for j in 0..n {
            let lhs = (0..n).map(|k| (K::one(), vec![us(k, i), u(k, j)])).collect();
            relations.push(Relation {
                lhs,
                rhs: if i == j { K::one() } else { K::zero() },
            });
        }
    }
    // (conj(u) Q tu)_{il} = sum_{j,k} us_ij Q_jk u_lk = Q_il, Q = (AA*)^-1
    for i in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if !aa_star_inv[(j, k)].is_zero() {
                        lhs.push((aa_star_inv[(j, k)].clone(), vec![us(i, j), u(l, k)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: aa_star_inv[(i, l)].clone(),
            });
        }
    }
    // (tu P conj(u))_{il} = sum_{j,k} u_ji P_jk us_kl = P_il, P = AA*
    for i in 0..n {
        for l in 0..n {
            let mut lhs = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if !aa_star[(j, k)].is_zero() {
                        lhs.push((aa_star[(j, k)].clone(), vec![u(j, i), us(k, l)]));
                    }
                }
            }
            relations.push(Relation {
                lhs,
                rhs: aa_star[(i, l)].clone(),
            });
        }
    }

    let mut coproduct = BTreeMap::new();
    matrix_coproduct(&mut coproduct, GenFamily::U, n);
    matrix_coproduct(&mut coproduct, GenFamily::Ustar, n);

    Ok(RelationSet {
        n,
        gens,
        relations,
        coproduct,
        basis: PresentationBasis::Unitary { aa_star },
    })
}

/// Evaluates every relation at a scalar assignment of the generators.
pub fn relations_hold<K: Field>(
    rs: &RelationSet<K>,
    assign: impl Fn(&GenSym) -> K,
) -> bool {
    rs.relations.iter().all(|rel| {
        let mut acc = K::zero();
        for (coeff, monomial) in &rel.lhs {
            let mut term = coeff.clone();
            for g in monomial {
                term = term * assign(g);
            }
            acc = acc + term;
        }
        acc == rel.rhs
    })
}

/// Checks an explicit matrix pair `(v, w)` against a general relation set.
pub fn classical_point_pair<K: Field>(
    rs: &RelationSet<K>,
    v_mat: &Matrix<K>,
    w_mat: &Matrix<K>,
) -> Result<bool, Error> {
    if !matches!(rs.basis, PresentationBasis::General { .. }) {
        return Err(Error::Domain(
            "matrix-pair points apply to the general presentation only".into(),
        ));
    }
    if v_mat.rows() != rs.n || !v_mat.is_square() || w_mat.rows() != rs.n || !w_mat.is_square()
    {
        return Err(Error::Domain("classical point has the wrong size".into()));
    }
    Ok(relations_hold(rs, |g| match g.family {
        GenFamily::V => v_mat[(g.row, g.col)].clone(),
        GenFamily::W => w_mat[(g.row, g.col)].clone(),
        GenFamily::U | GenFamily::Ustar => K::zero(),
    }))
}

/// Substitutes `v := S` together with the family-2-dictated partner
/// `w := A^-1 tS^-1 A` (for `A = 1` exactly `w := tS^-1`) and evaluates all
/// relations. For a unitary presentation, substitutes `u := S` and
/// `us := conj(S)` entrywise.
pub fn classical_point_check<K: Field>(
    rs: &RelationSet<K>,
    s: &Matrix<K>,
) -> Result<bool, Error> {
    if s.rows() != rs.n || !s.is_square() {
        return Err(Error::Domain("classical point has the wrong size".into()));
    }
    let s_inv = s.inverse()?;
    match &rs.basis {
        PresentationBasis::General { a, .. } => {
            let w_mat = a.inverse()?.mul(&s_inv.transpose())?.mul(a)?;
            classical_point_pair(rs, s, &w_mat)
        }
        PresentationBasis::Unitary { .. } => Ok(relations_hold(rs, |g| match g.family {
            GenFamily::U => s[(g.row, g.col)].clone(),
            GenFamily::Ustar => s[(g.row, g.col)].conj(),
            _ => K::zero(),
        })),
    }
}

/// Index bookkeeping for coassociativity: `(Delta (x) id) Delta` and
/// `(id (x) Delta) Delta` agree on every generator in the table.
pub fn coproduct_coassociative<K: Field>(rs: &RelationSet<K>) -> bool {
    let delta = |g: &GenSym| rs.coproduct.get(g).cloned().unwrap_or_default();
    for gen in rs.coproduct.keys() {
        let mut left: Vec<(GenSym, GenSym, GenSym)> = Vec::new();
        let mut right: Vec<(GenSym, GenSym, GenSym)> = Vec::new();
        for (a, b) in delta(gen) {
            for (c, e) in delta(&a) {
                left.push((c, e, b));
            }
            for (c, e) in delta(&b) {
                right.push((a, c, e));
            }
        }
        left.sort();
        right.sort();
        if left != right {
            return false;
        }
    }
    true
}
