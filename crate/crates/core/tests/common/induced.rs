//! Brute-force model of `W_R = C^x ∪ C^x j` (with `j z j^-1 = conj(z)` and
//! `j^2 = -1`) and of the representation induced from a character of `C^x`.
//!
//! The induced space is `{f : W_R -> C | f(h w) = χ(h) f(w), h in C^x}` with
//! `(ρ(g) f)(w) = f(w g)`. A function is fixed by its values at the coset
//! representatives `1` and `j`, which gives a concrete 2x2 matrix for every
//! group element. Restricting to `C^x` and reading the diagonal recovers the
//! constituent characters numerically.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy)]
pub struct WeilElement {
    /// `z` in `z j^a`.
    pub z: Complex64,
    /// Whether the `j` factor is present.
    pub j: bool,
}

impl WeilElement {
    pub fn torus(z: Complex64) -> Self {
        Self { z, j: false }
    }

    pub fn j() -> Self {
        Self {
            z: Complex64::new(1.0, 0.0),
            j: true,
        }
    }

    pub fn mul(self, other: Self) -> Self {
        // z1 j^a z2 j^b = z1 (j^a z2 j^-a) j^(a+b)
        let moved = if self.j { other.z.conj() } else { other.z };
        let mut z = self.z * moved;
        let j = self.j ^ other.j;
        if self.j && other.j {
            z = -z;
        }
        Self { z, j }
    }
}

/// `z -> (z/|z|)^l |z|^{it}`.
pub fn circle_character(ell: i64, t: f64, z: Complex64) -> Complex64 {
    let modulus = z.norm();
    let phase = z / modulus;
    phase.powi(ell as i32) * Complex64::from_polar(1.0, t * modulus.ln())
}

/// Value at `w` of the induced-space function with `f(1) = v[0]`, `f(j) = v[1]`.
fn evaluate(ell: i64, t: f64, v: [Complex64; 2], w: WeilElement) -> Complex64 {
    // w = h * rep with h = w.z in C^x and rep in {1, j}
    let rep = if w.j { v[1] } else { v[0] };
    circle_character(ell, t, w.z) * rep
}

/// Matrix of `ρ(g)` in the basis `{f_1, f_2}` dual to evaluation at `1, j`.
pub fn induced_matrix(ell: i64, t: f64, g: WeilElement) -> [[Complex64; 2]; 2] {
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let basis = [[one, zero], [zero, one]];
    let reps = [WeilElement::torus(one), WeilElement::j()];
    let mut m = [[zero; 2]; 2];
    for (col, v) in basis.iter().enumerate() {
        for (row, rep) in reps.iter().enumerate() {
            m[row][col] = evaluate(ell, t, *v, rep.mul(g));
        }
    }
    m
}

fn matmul(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> [[Complex64; 2]; 2] {
    let mut c = [[Complex64::new(0.0, 0.0); 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() < 1e-9
}

/// Recover `(l, t)` of a character of `C^x` from samples, searching
/// `|l| <= 64` and reading `t` off the positive reals (`|t| < π`).
fn identify(character: impl Fn(Complex64) -> Complex64) -> (i64, f64) {
    let e = Complex64::new(std::f64::consts::E, 0.0);
    let t = character(e).arg();
    let angles = [0.3, 1.1, 2.7];
    let ell = (-64..=64)
        .find(|&ell| {
            angles.iter().all(|&theta| {
                let z = Complex64::from_polar(1.0, theta);
                close(character(z), z.powi(ell as i32))
            })
        })
        .expect("character exponent within search range");
    // full check on generic points
    for &(r, theta) in &[(0.5, 0.7), (3.0, -2.2), (1.7, 3.0)] {
        let z = Complex64::from_polar(r, theta);
        assert!(close(character(z), circle_character(ell, t, z)));
    }
    (ell, t)
}

/// Constituents of `ind_{C^x}^{W_R} (l, t)` restricted to `C^x`, sorted.
pub fn character_pairs_of_induced(ell: i64, t: f64) -> Vec<(i64, f64)> {
    let samples = [
        WeilElement::torus(Complex64::from_polar(2.0, 0.4)),
        WeilElement::torus(Complex64::from_polar(0.3, -1.9)),
        WeilElement::j(),
        WeilElement::torus(Complex64::from_polar(1.4, 2.5)).mul(WeilElement::j()),
    ];
    // sanity: ρ is a homomorphism
    for &a in &samples {
        for &b in &samples {
            let lhs = induced_matrix(ell, t, a.mul(b));
            let rhs = matmul(induced_matrix(ell, t, a), induced_matrix(ell, t, b));
            for i in 0..2 {
                for k in 0..2 {
                    assert!(close(lhs[i][k], rhs[i][k]), "not a representation");
                }
            }
        }
    }
    // the torus acts diagonally in this basis
    for &s in &samples[..2] {
        let m = induced_matrix(ell, t, s);
        assert!(close(m[0][1], Complex64::new(0.0, 0.0)));
        assert!(close(m[1][0], Complex64::new(0.0, 0.0)));
    }
    let mut pairs: Vec<(i64, f64)> = (0..2)
        .map(|k| identify(|z| induced_matrix(ell, t, WeilElement::torus(z))[k][k]))
        .collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.total_cmp(&b.1)));
    pairs
}

/// Restriction to `C^x` of the character `sgn^ε |.|^{it}` of `W_R`, through
/// the abelianization `z -> |z|^2`, `j -> -1`.
pub fn character_pairs_of_one_dim(epsilon: u8, t: f64) -> (i64, f64) {
    let chi = |x: f64| -> Complex64 {
        let sign = if epsilon == 1 && x < 0.0 { -1.0 } else { 1.0 };
        Complex64::from_polar(sign, t * x.abs().ln())
    };
    identify(|z| chi(z.norm_sqr()))
}
