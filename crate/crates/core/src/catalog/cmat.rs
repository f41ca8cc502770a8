//! Complex matrices with rational real and imaginary parts.

use crate::linalg::Rational;

/// `n x n` complex matrix; as a real vector it is laid out as all real parts
/// (row-major) followed by all imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMat {
    pub n: usize,
    pub re: Vec<Rational>,
    pub im: Vec<Rational>,
}

impl CMat {
    pub fn zeros(n: usize) -> Self {
        CMat {
            n,
            re: vec![Rational::zero(); n * n],
            im: vec![Rational::zero(); n * n],
        }
    }

    /// Real diagonal matrix.
    pub fn diag(entries: &[i64]) -> Self {
        let n = entries.len();
        let mut m = CMat::zeros(n);
        for (i, &d) in entries.iter().enumerate() {
            m.re[i * n + i] = Rational::from(d);
        }
        m
    }

    /// Standard symplectic form `[[0, I], [-I, 0]]` of size `2h`.
    pub fn symplectic(h: usize) -> Self {
        let n = 2 * h;
        let mut m = CMat::zeros(n);
        for i in 0..h {
            m.re[i * n + h + i] = Rational::one();
            m.re[(h + i) * n + i] = Rational::from(-1);
        }
        m
    }

    pub fn from_real_vector(n: usize, v: &[Rational]) -> Self {
        assert_eq!(v.len(), 2 * n * n);
        CMat {
            n,
            re: v[..n * n].to_vec(),
            im: v[n * n..].to_vec(),
        }
    }

    pub fn to_real_vector(&self) -> Vec<Rational> {
        let mut v = self.re.clone();
        v.extend(self.im.iter().cloned());
        v
    }

    pub fn real_dim(n: usize) -> usize {
        2 * n * n
    }

    pub fn get(&self, i: usize, j: usize) -> (&Rational, &Rational) {
        (&self.re[i * self.n + j], &self.im[i * self.n + j])
    }

    pub fn set(&mut self, i: usize, j: usize, re: Rational, im: Rational) {
        self.re[i * self.n + j] = re;
        self.im[i * self.n + j] = im;
    }

    pub fn mul(&self, o: &CMat) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let (ar, ai) = self.get(i, k);
                if ar.is_zero() && ai.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let (br, bi) = o.get(k, j);
                    if br.is_zero() && bi.is_zero() {
                        continue;
                    }
                    out.re[i * n + j] += ar * br - ai * bi;
                    out.im[i * n + j] += ar * bi + ai * br;
                }
            }
        }
        out
    }

    pub fn add(&self, o: &CMat) -> CMat {
        CMat {
            n: self.n,
            re: self.re.iter().zip(&o.re).map(|(a, b)| a + b).collect(),
            im: self.im.iter().zip(&o.im).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &CMat) -> CMat {
        CMat {
            n: self.n,
            re: self.re.iter().zip(&o.re).map(|(a, b)| a - b).collect(),
            im: self.im.iter().zip(&o.im).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> CMat {
        CMat {
            n: self.n,
            re: self.re.iter().map(|a| a * c).collect(),
            im: self.im.iter().map(|a| a * c).collect(),
        }
    }

    pub fn commutator(&self, o: &CMat) -> CMat {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.re[j * n + i] = self.re[i * n + j].clone();
                out.im[j * n + i] = self.im[i * n + j].clone();
            }
        }
        out
    }

    pub fn conj_transpose(&self) -> CMat {
        let mut t = self.transpose();
        for v in t.im.iter_mut() {
            *v = -&*v;
        }
        t
    }

    pub fn times_i(&self) -> CMat {
        CMat {
            n: self.n,
            re: self.im.iter().map(|a| -a).collect(),
            im: self.re.clone(),
        }
    }

    pub fn trace(&self) -> (Rational, Rational) {
        let n = self.n;
        let re = (0..n).map(|i| &self.re[i * n + i]).sum();
        let im = (0..n).map(|i| &self.im[i * n + i]).sum();
        (re, im)
    }

    /// Block-diagonal placement of `self` at offset `at` inside an `n x n` zero matrix.
    pub fn embed(&self, n: usize, at: usize) -> CMat {
        let mut out = CMat::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let (r, im) = self.get(i, j);
                out.set(at + i, at + j, r.clone(), im.clone());
            }
        }
        out
    }
}
