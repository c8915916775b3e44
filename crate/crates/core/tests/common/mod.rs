#![allow(dead_code)]

use grassmann::{FieldElement, FieldSpec, Matrix, Multivector, Vector};

pub fn q() -> FieldSpec {
    FieldSpec::rationals()
}

pub fn v(xs: &[i64]) -> Vector {
    Vector::from_ints(q(), xs)
}

pub fn e(d: usize, indices: &[usize]) -> Multivector {
    Multivector::basis(q(), d, indices).unwrap()
}

/// All permutations of `0..n` with their inversion parity.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), inversions % 2 == 1));
            return;
        }
        for k in 0..n {
            if !used[k] {
                used[k] = true;
                prefix.push(k);
                go(prefix, used, out);
                prefix.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `Σ_σ sgn(σ) Π m[i][σ(i)]`.
pub fn leibniz_det(m: &Matrix) -> FieldElement {
    let f = m.field();
    permutations(m.rows()).into_iter().fold(f.zero(), |acc, (p, odd)| {
        let term = p.iter().enumerate().fold(f.one(), |t, (i, &j)| t * m.get(i, j).clone());
        if odd {
            acc - term
        } else {
            acc + term
        }
    })
}

/// `Σ_σ Π m[i][σ(i)]`.
pub fn permanent_by_enumeration(m: &Matrix) -> FieldElement {
    let f = m.field();
    permutations(m.rows()).into_iter().fold(f.zero(), |acc, (p, _)| {
        acc + p.iter().enumerate().fold(f.one(), |t, (i, &j)| t * m.get(i, j).clone())
    })
}
