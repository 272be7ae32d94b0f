//! Integer polynomials in a single formal variable.

use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// The field size of the group.
    Q,
    /// The counting variable of antichain generating functions.
    T,
}

impl Var {
    fn symbol(self) -> char {
        match self {
            Var::Q => 'q',
            Var::T => 't',
        }
    }
}

/// Coefficients are stored in ascending degree with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPolynomial {
    var: Var,
    coeffs: Vec<i128>,
}

impl QPolynomial {
    pub fn new(var: Var, mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        QPolynomial { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Self::new(var, Vec::new())
    }

    pub fn monomial(var: Var, degree: usize, coeff: i128) -> Self {
        let mut c = vec![0; degree + 1];
        c[degree] = coeff;
        Self::new(var, c)
    }

    /// `q^t (q − 1)`.
    pub fn q_power_times_q_minus_one(t: usize) -> Self {
        let mut c = vec![0; t + 2];
        c[t] = -1;
        c[t + 1] = 1;
        Self::new(Var::Q, c)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &QPolynomial) -> QPolynomial {
        assert_eq!(self.var, other.var);
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            self.var,
            (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect(),
        )
    }

    pub fn mul(&self, other: &QPolynomial) -> QPolynomial {
        assert_eq!(self.var, other.var);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.var);
        }
        let mut c = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(self.var, c)
    }

    /// Writes `q^t(q-1)` style for polynomials of that shape, plain monomials
    /// as `q^k`, and falls back to the expanded form otherwise.
    pub fn compact(&self) -> String {
        let x = self.var.symbol();
        let nz: Vec<(usize, i128)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
            .collect();
        if let [(t, -1), (t1, 1)] = nz[..] {
            if t1 == t + 1 {
                return match t {
                    0 => format!("{x}-1"),
                    1 => format!("{x}({x}-1)"),
                    _ => format!("{x}^{t}({x}-1)"),
                };
            }
        }
        self.to_string()
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let x = self.var.symbol();
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "{x}")?;
                    } else {
                        write!(f, "{x}^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
