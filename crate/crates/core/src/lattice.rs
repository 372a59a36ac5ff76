//! Integer intersection arithmetic on the model surfaces.
//!
//! Four lattices are modelled:
//!
//! * `R(n)`: the symmetric square of an elliptic curve blown up at `n` points of
//!   `T`, with basis `s` (minimal section), `f` (fibre) and exceptionals
//!   `e1..en`. Classes are stored as `a*s + b*f - sum(g_i * e_i)`.
//! * `P(n)`: the plane blown up at `n` points of the cubic `T`, basis `l`,
//!   `e1..en`, stored as `d*l - sum(m_i * e_i)`.
//! * `X(n_R, n_P)`: the two surfaces glued along `T`; a class is a pair with
//!   matching degree on `T`.
//! * the Enriques isotropic lattice spanned by `E1..E10` and the `E{i,j}`.
//!
//! Everything is numerical. The torsion canonical class of the glued surface is
//! carried as a flag only.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::LatticeError;

fn add_i(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("integer overflow in lattice arithmetic")
}

fn mul_i(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("integer overflow in lattice arithmetic")
}

/// Which of the two smooth components a class lives on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    R,
    P,
}

/// A blow-up `R(n)` or `P(n)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Surface {
    pub side: Side,
    pub n: usize,
}

impl Surface {
    pub const fn r(n: usize) -> Self {
        Surface { side: Side::R, n }
    }

    pub const fn p(n: usize) -> Self {
        Surface { side: Side::P, n }
    }

    /// Length of the coefficient vector of a class on this surface.
    pub fn rank(&self) -> usize {
        match self.side {
            Side::R => self.n + 2,
            Side::P => self.n + 1,
        }
    }

    fn basis_len(&self) -> usize {
        self.rank() - self.n
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::R => write!(f, "R({})", self.n),
            Side::P => write!(f, "P({})", self.n),
        }
    }
}

/// Every lattice the crate knows about.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurfaceModel {
    R(usize),
    P(usize),
    X { n_r: usize, n_p: usize },
    EnriquesIso,
}

impl SurfaceModel {
    /// Nine points split between the two sides.
    pub fn is_semistable(&self) -> bool {
        matches!(self, SurfaceModel::X { n_r, n_p } if n_r + n_p == 9)
    }

    pub fn surface(&self) -> Option<Surface> {
        match *self {
            SurfaceModel::R(n) => Some(Surface::r(n)),
            SurfaceModel::P(n) => Some(Surface::p(n)),
            _ => None,
        }
    }
}

impl From<Surface> for SurfaceModel {
    fn from(s: Surface) -> Self {
        match s.side {
            Side::R => SurfaceModel::R(s.n),
            Side::P => SurfaceModel::P(s.n),
        }
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::R(n) => write!(f, "R({n})"),
            SurfaceModel::P(n) => write!(f, "P({n})"),
            SurfaceModel::X { n_r, n_p } => write!(f, "X({n_r},{n_p})"),
            SurfaceModel::EnriquesIso => write!(f, "E"),
        }
    }
}

/// An integer divisor class on `R(n)` or `P(n)`.
///
/// Exceptional coefficients are stored with the sign flipped, so `s - e1` on
/// `R(1)` has coefficients `[1, 0, 1]` and `3l - e1 - e2` on `P(2)` has
/// `[3, 1, 1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivClass {
    surface: Surface,
    coeffs: Vec<i64>,
}

impl DivClass {
    pub fn new(surface: Surface, coeffs: Vec<i64>) -> Result<Self, LatticeError> {
        if coeffs.len() != surface.rank() {
            return Err(LatticeError::CoefficientCount {
                surface,
                expected: surface.rank(),
                got: coeffs.len(),
            });
        }
        Ok(DivClass { surface, coeffs })
    }

    pub fn zero(surface: Surface) -> Self {
        DivClass {
            surface,
            coeffs: vec![0; surface.rank()],
        }
    }

    /// `alpha*s + beta*f - sum(gammas[i] * e_{i+1})` on `R(gammas.len())`.
    pub fn on_r(alpha: i64, beta: i64, gammas: &[i64]) -> Self {
        let mut coeffs = vec![alpha, beta];
        coeffs.extend_from_slice(gammas);
        DivClass {
            surface: Surface::r(gammas.len()),
            coeffs,
        }
    }

    /// `d*l - sum(mults[i] * e_{i+1})` on `P(mults.len())`.
    pub fn on_p(d: i64, mults: &[i64]) -> Self {
        let mut coeffs = vec![d];
        coeffs.extend_from_slice(mults);
        DivClass {
            surface: Surface::p(mults.len()),
            coeffs,
        }
    }

    pub fn section(n: usize) -> Self {
        let mut c = DivClass::zero(Surface::r(n));
        c.coeffs[0] = 1;
        c
    }

    pub fn fibre(n: usize) -> Self {
        let mut c = DivClass::zero(Surface::r(n));
        c.coeffs[1] = 1;
        c
    }

    pub fn line(n: usize) -> Self {
        let mut c = DivClass::zero(Surface::p(n));
        c.coeffs[0] = 1;
        c
    }

    /// The exceptional curve `e_index` (1-based).
    pub fn exceptional(surface: Surface, index: usize) -> Result<Self, LatticeError> {
        if index == 0 || index > surface.n {
            return Err(LatticeError::IndexOutOfRange {
                what: "exceptional curve",
                index,
            });
        }
        let mut c = DivClass::zero(surface);
        c.coeffs[surface.basis_len() + index - 1] = -1;
        Ok(c)
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The `s`-coefficient on `R`, the `l`-coefficient on `P`.
    pub fn leading(&self) -> i64 {
        self.coeffs[0]
    }

    /// The `f`-coefficient. Zero on `P`.
    pub fn fibre_coeff(&self) -> i64 {
        match self.surface.side {
            Side::R => self.coeffs[1],
            Side::P => 0,
        }
    }

    /// Multiplicities `g_i` (resp. `m_i`) in `... - sum(g_i e_i)`.
    pub fn multiplicities(&self) -> &[i64] {
        &self.coeffs[self.surface.basis_len()..]
    }

    /// Multiplicity at `e_index` (1-based).
    pub fn multiplicity(&self, index: usize) -> i64 {
        self.multiplicities()[index - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn zip_with(&self, other: &DivClass, op: impl Fn(i64, i64) -> i64) -> Result<DivClass, LatticeError> {
        if self.surface != other.surface {
            return Err(LatticeError::ModelMismatch(self.surface, other.surface));
        }
        Ok(DivClass {
            surface: self.surface,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(&a, &b)| op(a, b))
                .collect(),
        })
    }

    pub fn checked_add(&self, other: &DivClass) -> Result<DivClass, LatticeError> {
        self.zip_with(other, add_i)
    }

    pub fn checked_sub(&self, other: &DivClass) -> Result<DivClass, LatticeError> {
        self.zip_with(other, |a, b| a.checked_sub(b).expect("integer overflow in lattice arithmetic"))
    }

    pub fn scaled(&self, k: i64) -> DivClass {
        DivClass {
            surface: self.surface,
            coeffs: self.coeffs.iter().map(|&c| mul_i(c, k)).collect(),
        }
    }

    /// Sum of a list of classes on `surface`.
    pub fn sum<'a>(surface: Surface, classes: impl IntoIterator<Item = &'a DivClass>) -> Result<DivClass, LatticeError> {
        classes
            .into_iter()
            .try_fold(DivClass::zero(surface), |acc, c| acc.checked_add(c))
    }

    /// Pull back to a bigger blow-up: exceptional `i` goes to `positions[i-1]`
    /// on a surface with `n` exceptionals.
    pub fn pullback(&self, n: usize, positions: &[usize]) -> Result<DivClass, LatticeError> {
        if positions.len() != self.surface.n {
            return Err(LatticeError::IndexOutOfRange {
                what: "pullback position list",
                index: positions.len(),
            });
        }
        let target = Surface {
            side: self.surface.side,
            n,
        };
        let base = target.basis_len();
        let mut out = DivClass::zero(target);
        out.coeffs[..base].copy_from_slice(&self.coeffs[..base]);
        for (i, &pos) in positions.iter().enumerate() {
            if pos == 0 || pos > n {
                return Err(LatticeError::IndexOutOfRange {
                    what: "pullback position",
                    index: pos,
                });
            }
            out.coeffs[base + pos - 1] = self.coeffs[base + i];
        }
        Ok(out)
    }

    /// Push down to the blow-up at the exceptionals in `keep` (1-based, in
    /// the order given). Every dropped exceptional must have coefficient 0.
    pub fn restrict_exceptionals(&self, keep: &[usize]) -> Result<DivClass, LatticeError> {
        let base = self.surface.basis_len();
        for &k in keep {
            if k == 0 || k > self.surface.n {
                return Err(LatticeError::IndexOutOfRange {
                    what: "kept exceptional",
                    index: k,
                });
            }
        }
        for i in 1..=self.surface.n {
            let c = self.coeffs[base + i - 1];
            if !keep.contains(&i) && c != 0 {
                return Err(LatticeError::NonzeroDropped { index: i, coeff: c });
            }
        }
        let mut coeffs = self.coeffs[..base].to_vec();
        coeffs.extend(keep.iter().map(|&k| self.coeffs[base + k - 1]));
        Ok(DivClass {
            surface: Surface {
                side: self.surface.side,
                n: keep.len(),
            },
            coeffs,
        })
    }

    pub fn square(&self) -> i64 {
        pair(self, self).expect("same model")
    }

    /// `p_a = L.(L+K)/2 + 1`.
    pub fn arithmetic_genus(&self) -> i64 {
        let k = canonical_class(self.surface);
        let lk = add_i(self.square(), pair(self, &k).expect("same model"));
        assert!(lk % 2 == 0, "L.(L+K) = {lk} is odd for {self}");
        lk / 2 + 1
    }

    pub fn dot_t(&self) -> i64 {
        pair(self, &t_class(self.surface)).expect("same model")
    }
}

impl Add for &DivClass {
    type Output = DivClass;
    fn add(self, rhs: &DivClass) -> DivClass {
        self.checked_add(rhs).expect("adding classes on different surfaces")
    }
}

impl Add for DivClass {
    type Output = DivClass;
    fn add(self, rhs: DivClass) -> DivClass {
        &self + &rhs
    }
}

impl Sub for &DivClass {
    type Output = DivClass;
    fn sub(self, rhs: &DivClass) -> DivClass {
        self.checked_sub(rhs).expect("subtracting classes on different surfaces")
    }
}

impl Sub for DivClass {
    type Output = DivClass;
    fn sub(self, rhs: DivClass) -> DivClass {
        &self - &rhs
    }
}

impl Neg for &DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        self.scaled(-1)
    }
}

impl Neg for DivClass {
    type Output = DivClass;
    fn neg(self) -> DivClass {
        self.scaled(-1)
    }
}

impl Mul<&DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: &DivClass) -> DivClass {
        rhs.scaled(self)
    }
}

impl Mul<DivClass> for i64 {
    type Output = DivClass;
    fn mul(self, rhs: DivClass) -> DivClass {
        rhs.scaled(self)
    }
}

pub(crate) fn write_term(out: &mut String, coeff: i64, gen: &str) {
    if coeff == 0 {
        return;
    }
    if coeff < 0 {
        out.push('-');
    } else if !out.is_empty() {
        out.push('+');
    }
    let mag = coeff.unsigned_abs();
    if mag != 1 {
        out.push_str(&mag.to_string());
    }
    out.push_str(gen);
}

impl fmt::Display for DivClass {
    /// Canonical expression, e.g. `2s-f-e1-e2` or `3l-e1`; zero prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        match self.surface.side {
            Side::R => {
                write_term(&mut out, self.coeffs[0], "s");
                write_term(&mut out, self.coeffs[1], "f");
            }
            Side::P => write_term(&mut out, self.coeffs[0], "l"),
        }
        for (i, &m) in self.multiplicities().iter().enumerate() {
            write_term(&mut out, -m, &format!("e{}", i + 1));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Intersection product on `R(n)` or `P(n)`.
///
/// `s.s = 1`, `s.f = 1`, `f.f = 0`, `l.l = 1`, `e_i.e_i = -1`, all other
/// basis products 0.
pub fn pair(a: &DivClass, b: &DivClass) -> Result<i64, LatticeError> {
    if a.surface != b.surface {
        return Err(LatticeError::ModelMismatch(a.surface, b.surface));
    }
    let (x, y) = (&a.coeffs, &b.coeffs);
    let mut acc = match a.surface.side {
        Side::R => add_i(add_i(mul_i(x[0], y[0]), mul_i(x[0], y[1])), mul_i(x[1], y[0])),
        Side::P => mul_i(x[0], y[0]),
    };
    for (g, h) in a.multiplicities().iter().zip(b.multiplicities()) {
        acc = acc.checked_sub(mul_i(*g, *h)).expect("integer overflow in lattice arithmetic");
    }
    Ok(acc)
}

/// Numerical canonical class: `-2s + f + sum(e_i)` on `R(n)`, `-3l + sum(e_i)` on `P(n)`.
pub fn canonical_class(surface: Surface) -> DivClass {
    -t_class(surface)
}

/// Numerical class of the double curve `T`: `2s - f - sum(e_i)` on `R(n)`
/// (anticanonical up to torsion) and `3l - sum(e_i)` on `P(n)`.
pub fn t_class(surface: Surface) -> DivClass {
    match surface.side {
        Side::R => DivClass::on_r(2, -1, &vec![1; surface.n]),
        Side::P => DivClass::on_p(3, &vec![1; surface.n]),
    }
}

/// Result of [`canonical_class_of`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalClass {
    Div(DivClass),
    X(XClass),
}

/// Canonical class of any model except the Enriques lattice. On the glued
/// surface it is numerically trivial and comes back with the torsion flag set.
pub fn canonical_class_of(model: SurfaceModel) -> Result<CanonicalClass, LatticeError> {
    match model {
        SurfaceModel::R(n) => Ok(CanonicalClass::Div(canonical_class(Surface::r(n)))),
        SurfaceModel::P(n) => Ok(CanonicalClass::Div(canonical_class(Surface::p(n)))),
        SurfaceModel::X { n_r, n_p } => Ok(CanonicalClass::X(XClass {
            r: DivClass::zero(Surface::r(n_r)),
            p: DivClass::zero(Surface::p(n_p)),
            torsion: true,
        })),
        SurfaceModel::EnriquesIso => Err(LatticeError::Unsupported(
            "canonical class of the Enriques lattice (torsion, numerically zero)".into(),
        )),
    }
}

/// A Cartier class `(L', L'')` on the glued surface `X(n_R, n_P)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XClass {
    r: DivClass,
    p: DivClass,
    /// Set when the pair is only known up to the torsion canonical class.
    pub torsion: bool,
}

impl XClass {
    /// Glue an `R`-class and a `P`-class; fails unless their `T`-degrees agree.
    pub fn new(r: DivClass, p: DivClass) -> Result<Self, LatticeError> {
        if r.surface.side != Side::R {
            return Err(LatticeError::Unsupported(format!("{} as the R-part", r.surface)));
        }
        if p.surface.side != Side::P {
            return Err(LatticeError::Unsupported(format!("{} as the P-part", p.surface)));
        }
        let (r_degree, p_degree) = (r.dot_t(), p.dot_t());
        if r_degree != p_degree {
            return Err(LatticeError::NotCartier { r_degree, p_degree });
        }
        Ok(XClass { r, p, torsion: false })
    }

    pub fn zero(n_r: usize, n_p: usize) -> Self {
        XClass {
            r: DivClass::zero(Surface::r(n_r)),
            p: DivClass::zero(Surface::p(n_p)),
            torsion: false,
        }
    }

    pub fn r_part(&self) -> &DivClass {
        &self.r
    }

    pub fn p_part(&self) -> &DivClass {
        &self.p
    }

    pub fn model(&self) -> SurfaceModel {
        SurfaceModel::X {
            n_r: self.r.surface.n,
            n_p: self.p.surface.n,
        }
    }

    /// Common degree on `T`.
    pub fn t_degree(&self) -> i64 {
        self.r.dot_t()
    }

    pub fn checked_add(&self, other: &XClass) -> Result<XClass, LatticeError> {
        Ok(XClass {
            r: self.r.checked_add(&other.r)?,
            p: self.p.checked_add(&other.p)?,
            torsion: self.torsion ^ other.torsion,
        })
    }

    pub fn scaled(&self, k: i64) -> XClass {
        XClass {
            r: self.r.scaled(k),
            p: self.p.scaled(k),
            torsion: self.torsion && k % 2 != 0,
        }
    }

    /// `L^2 = L'^2 + L''^2`.
    pub fn square(&self) -> i64 {
        add_i(self.r.square(), self.p.square())
    }

    /// `p_a = L^2/2 + 1`, the canonical class being numerically trivial.
    pub fn arithmetic_genus(&self) -> i64 {
        let sq = self.square();
        assert!(sq % 2 == 0, "odd square {sq} on a Cartier class");
        sq / 2 + 1
    }
}

/// Product on the glued surface: sum of the products on each side.
pub fn pair_x(a: &XClass, b: &XClass) -> Result<i64, LatticeError> {
    Ok(add_i(pair(&a.r, &b.r)?, pair(&a.p, &b.p)?))
}

/// `xi = (T, -T)`. Cartier exactly when `n_R + n_P = 9`.
pub fn xi(n_r: usize, n_p: usize) -> Result<XClass, LatticeError> {
    XClass::new(t_class(Surface::r(n_r)), -t_class(Surface::p(n_p)))
}

/// A generator of the isotropic lattice: `E_i` or `E_{i,j}` with `i < j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E(u8),
    Eij(u8, u8),
}

impl Generator {
    pub fn e(i: u8) -> Result<Self, LatticeError> {
        if !(1..=10).contains(&i) {
            return Err(LatticeError::IndexOutOfRange {
                what: "isotropic generator",
                index: i as usize,
            });
        }
        Ok(Generator::E(i))
    }

    /// `E_{i,j}`, unordered.
    pub fn eij(i: u8, j: u8) -> Result<Self, LatticeError> {
        for k in [i, j] {
            if !(1..=10).contains(&k) {
                return Err(LatticeError::IndexOutOfRange {
                    what: "isotropic generator",
                    index: k as usize,
                });
            }
        }
        if i == j {
            return Err(LatticeError::IndexOutOfRange {
                what: "E_{i,j} needs i != j, got i = j",
                index: i as usize,
            });
        }
        Ok(Generator::Eij(i.min(j), i.max(j)))
    }

    /// All 55 generators: `E1..E10` then `E{i,j}` lexicographically.
    pub fn all() -> Vec<Generator> {
        let mut out: Vec<Generator> = (1..=10).map(Generator::E).collect();
        for i in 1..=10u8 {
            for j in i + 1..=10 {
                out.push(Generator::Eij(i, j));
            }
        }
        out
    }

    fn slot(&self) -> usize {
        match *self {
            Generator::E(i) => (i - 1) as usize,
            Generator::Eij(i, j) => 10 + pair_slot(i, j),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(i) => write!(f, "E{i}"),
            Generator::Eij(i, j) => write!(f, "E{i}.{j}"),
        }
    }
}

/// Index of `{i, j}` (1-based, `i < j`) among the 45 unordered pairs.
fn pair_slot(i: u8, j: u8) -> usize {
    let (i, j) = (i as usize - 1, j as usize - 1);
    // pairs (0,1..9), (1,2..9), ...
    i * (19 - i) / 2 + (j - i - 1)
}

const N_GENERATORS: usize = 55;

/// Gram value of two generators.
pub fn generator_pair(a: Generator, b: Generator) -> i64 {
    match (a, b) {
        (Generator::E(i), Generator::E(j)) => (i != j) as i64,
        (Generator::E(k), Generator::Eij(i, j)) | (Generator::Eij(i, j), Generator::E(k)) => {
            if k == i || k == j {
                2
            } else {
                1
            }
        }
        (Generator::Eij(i, j), Generator::Eij(k, l)) => {
            if (i, j) == (k, l) {
                0
            } else if i == k || i == l || j == k || j == l {
                1
            } else {
                2
            }
        }
    }
}

/// A formal integer combination of `E1..E10` and the `E{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoExpr {
    coeffs: [i64; N_GENERATORS],
}

impl Default for IsoExpr {
    fn default() -> Self {
        IsoExpr {
            coeffs: [0; N_GENERATORS],
        }
    }
}

impl IsoExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut out = Self::zero();
        out.coeffs[g.slot()] = 1;
        out
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, Generator)>) -> Self {
        let mut out = Self::zero();
        for (c, g) in terms {
            out.add_term(c, g);
        }
        out
    }

    pub fn add_term(&mut self, coeff: i64, g: Generator) {
        let slot = &mut self.coeffs[g.slot()];
        *slot = add_i(*slot, coeff);
    }

    pub fn coeff(&self, g: Generator) -> i64 {
        self.coeffs[g.slot()]
    }

    /// Coefficients of `E1..E10`.
    pub fn e_coeffs(&self) -> &[i64] {
        &self.coeffs[..10]
    }

    /// Nonzero terms in canonical generator order.
    pub fn terms(&self) -> Vec<(i64, Generator)> {
        Generator::all()
            .into_iter()
            .filter_map(|g| {
                let c = self.coeff(g);
                (c != 0).then_some((c, g))
            })
            .collect()
    }

    pub fn scaled(&self, k: i64) -> IsoExpr {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = mul_i(*c, k);
        }
        out
    }

    pub fn square(&self) -> i64 {
        iso_pair(self, self)
    }

    /// Relabel `E_i -> E_{perm(i)}` (and `E{i,j}` accordingly); `perm` maps 1..=10 onto itself.
    pub fn relabel(&self, perm: impl Fn(u8) -> u8) -> IsoExpr {
        let mut out = IsoExpr::zero();
        for (c, g) in self.terms() {
            let h = match g {
                Generator::E(i) => Generator::E(perm(i)),
                Generator::Eij(i, j) => Generator::eij(perm(i), perm(j)).expect("perm is a bijection"),
            };
            out.add_term(c, h);
        }
        out
    }
}

impl Add for &IsoExpr {
    type Output = IsoExpr;
    fn add(self, rhs: &IsoExpr) -> IsoExpr {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(rhs.coeffs.iter()) {
            *a = add_i(*a, *b);
        }
        out
    }
}

impl Sub for &IsoExpr {
    type Output = IsoExpr;
    fn sub(self, rhs: &IsoExpr) -> IsoExpr {
        self + &rhs.scaled(-1)
    }
}

impl fmt::Display for IsoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (c, g) in self.terms() {
            write_term(&mut out, c, &g.to_string());
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Bilinear extension of [`generator_pair`].
pub fn iso_pair(a: &IsoExpr, b: &IsoExpr) -> i64 {
    let gens = Generator::all();
    let mut acc = 0i64;
    for (x, &ca) in gens.iter().zip(a.coeffs.iter()) {
        if ca == 0 {
            continue;
        }
        for (y, &cb) in gens.iter().zip(b.coeffs.iter()) {
            if cb == 0 {
                continue;
            }
            acc = add_i(acc, mul_i(mul_i(ca, cb), generator_pair(*x, *y)));
        }
    }
    acc
}

/// Exceptionals of the limit surface used for restriction: `e1..e4` on the
/// `R`-side and `e5..e9` on the `P`-side (local indices 1..5).
pub const LIMIT_R_LABELS: [u8; 4] = [1, 2, 3, 4];
pub const LIMIT_P_LABELS: [u8; 5] = [5, 6, 7, 8, 9];

/// Local index on `P(5)` of the limit-surface exceptional `label` (5..=9).
pub fn limit_p_index(label: u8) -> usize {
    debug_assert!((5..=9).contains(&label));
    (label - 4) as usize
}

/// The generators with a known restriction to `X(4,5)`.
pub fn restrictable_generators() -> Vec<Generator> {
    let mut out: Vec<Generator> = (1..=10).map(Generator::E).collect();
    out.push(Generator::Eij(9, 10));
    out.push(Generator::Eij(5, 6));
    out
}

/// Restriction of a single generator to `X(4,5)`.
pub fn restrict_generator(g: Generator) -> Result<XClass, LatticeError> {
    let r = |a: i64, b: i64, gammas: [i64; 4]| DivClass::on_r(a, b, &gammas);
    let p = |d: i64, mults: [i64; 5]| DivClass::on_p(d, &mults);
    let (rc, pc) = match g {
        // (s - e_i, 0)
        Generator::E(i @ 1..=4) => {
            let mut gam = [0; 4];
            gam[i as usize - 1] = 1;
            (r(1, 0, gam), p(0, [0; 5]))
        }
        // (f, l - e_i)
        Generator::E(i @ 5..=8) => {
            let mut m = [0; 5];
            m[limit_p_index(i) - 1] = 1;
            (r(0, 1, [0; 4]), p(1, m))
        }
        // (s, e9)
        Generator::E(9) => (r(1, 0, [0; 4]), p(0, [0, 0, 0, 0, -1])),
        // (f, 2l - e5 - e6 - e7 - e8)
        Generator::E(10) => (r(0, 1, [0; 4]), p(2, [1, 1, 1, 1, 0])),
        // (f, l - e9)
        Generator::Eij(9, 10) => (r(0, 1, [0; 4]), p(1, [0, 0, 0, 0, 1])),
        // (s, l - e7 - e8)
        Generator::Eij(5, 6) => (r(1, 0, [0; 4]), p(1, [0, 0, 1, 1, 0])),
        other => return Err(LatticeError::UnsupportedGenerator(other.to_string())),
    };
    XClass::new(rc, pc)
}

/// Linear extension of [`restrict_generator`] to an expression.
pub fn restrict(e: &IsoExpr) -> Result<XClass, LatticeError> {
    let mut acc = XClass::zero(4, 5);
    for (c, g) in e.terms() {
        acc = acc.checked_add(&restrict_generator(g)?.scaled(c))?;
    }
    Ok(acc)
}
