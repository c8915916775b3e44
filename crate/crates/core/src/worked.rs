//! Replays of the worked computations in space (d = 4, over Q) and of the
//! symbolic Pappus instance, each paired with its expected printed value.

use crate::duality::{annihilator_H, regressive};
use crate::error::Result;
use crate::exterior::{wedge_vectors, Multivector, Vector};
use crate::field::FieldSpec;
use crate::harness::pappus_symbolic;
use crate::projective::{meet, ProjFlat};

/// A named computation with its expected canonical text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WorkedExample {
    pub name: String,
    pub expected: String,
    pub computed: std::result::Result<String, String>,
}

impl WorkedExample {
    pub fn matches(&self) -> bool {
        self.computed.as_deref() == Ok(self.expected.as_str())
    }
}

fn q() -> FieldSpec {
    FieldSpec::rationals()
}

fn e(indices: &[usize]) -> Multivector {
    Multivector::basis(q(), 4, indices).expect("valid basis blade")
}

/// The plane blade omitting `i`.
fn bar(i: usize) -> Multivector {
    let rest: Vec<usize> = (1..=4).filter(|&j| j != i).collect();
    e(&rest)
}

/// `bar(i1) ∨ bar(i2) ∨ …`, left to right; the empty product is `1234`.
fn bars(ix: &[usize]) -> Result<Multivector> {
    let mut acc = e(&[1, 2, 3, 4]);
    for &i in ix {
        acc = regressive(&acc, &bar(i))?;
    }
    Ok(acc)
}

fn v(xs: &[i64]) -> Vector {
    Vector::from_ints(q(), xs)
}

fn ex(out: &mut Vec<WorkedExample>, name: impl Into<String>, expected: &str, computed: Result<String>) {
    out.push(WorkedExample {
        name: name.into(),
        expected: expected.to_string(),
        computed: computed.map_err(|err| err.to_string()),
    });
}

fn h_table(out: &mut Vec<WorkedExample>) {
    let rows: [(&[usize], &str); 16] = [
        (&[], "1*E{1,2,3,4}"),
        (&[1], "1*E{2,3,4}"),
        (&[2], "-1*E{1,3,4}"),
        (&[3], "1*E{1,2,4}"),
        (&[4], "-1*E{1,2,3}"),
        (&[1, 2], "1*E{3,4}"),
        (&[1, 3], "-1*E{2,4}"),
        (&[1, 4], "1*E{2,3}"),
        (&[2, 3], "1*E{1,4}"),
        (&[2, 4], "-1*E{1,3}"),
        (&[3, 4], "1*E{1,2}"),
        (&[1, 2, 3], "1*E{4}"),
        (&[1, 2, 4], "-1*E{3}"),
        (&[1, 3, 4], "1*E{2}"),
        (&[2, 3, 4], "-1*E{1}"),
        (&[1, 2, 3, 4], "1*E{}"),
    ];
    for (ix, want) in rows {
        let name = format!("H({})", e(ix));
        ex(out, name, want, annihilator_H(&e(ix)).map(|m| m.to_string()));
    }
}

fn bar_table(out: &mut Vec<WorkedExample>) {
    let rows: [(&str, &[usize], Multivector); 15] = [
        ("1234", &[], e(&[1, 2, 3, 4])),
        ("234", &[1], e(&[2, 3, 4])),
        ("134", &[2], e(&[1, 3, 4])),
        ("124", &[3], e(&[1, 2, 4])),
        ("123", &[4], e(&[1, 2, 3])),
        ("34", &[1, 2], -&e(&[3, 4])),
        ("24", &[1, 3], -&e(&[2, 4])),
        ("23", &[1, 4], -&e(&[2, 3])),
        ("14", &[2, 3], -&e(&[1, 4])),
        ("13", &[2, 4], -&e(&[1, 3])),
        ("12", &[3, 4], -&e(&[1, 2])),
        ("4", &[1, 2, 3], -&e(&[4])),
        ("3", &[1, 2, 4], -&e(&[3])),
        ("2", &[1, 3, 4], -&e(&[2])),
        ("1", &[2, 3, 4], -&e(&[1])),
    ];
    for (label, ix, want) in rows {
        let name = format!("bar product {ix:?} against {label}");
        ex(out, name, &want.to_string(), bars(ix).map(|m| m.to_string()));
    }
    ex(out, "bar product [1, 2, 3, 4]", "1*e{}", bars(&[1, 2, 3, 4]).map(|m| m.to_string()));
}

fn space_examples(out: &mut Vec<WorkedExample>) -> Result<()> {
    let r = |a: &Multivector, b: &Multivector| regressive(a, b).map(|m| m.to_string());
    ex(out, "234.123", "-1*e{2,3}", r(&e(&[2, 3, 4]), &e(&[1, 2, 3])));
    ex(
        out,
        "(1+2)(1+3)",
        "-1*e{1,2}+1*e{1,3}+1*e{2,3}",
        (&e(&[1]) + &e(&[2])).wedge(&(&e(&[1]) + &e(&[3]))).map(|m| m.to_string()),
    );

    let plane = wedge_vectors(&[v(&[1, 1, 0, 0]), v(&[1, 0, 1, 0]), v(&[1, 0, 0, 1])])?;
    let plane_bars = &(&(&bar(2) - &bar(3)) + &bar(4)) + &bar(1);
    ex(out, "(1+2)(1+3)(1+4) in plane blades", &plane_bars.to_string(), Ok(plane.to_string()));
    let line_text = "1*e{1,3}-1*e{1,4}-1*e{3,4}";
    ex(out, "plane.2bar", line_text, r(&plane, &bar(2)));
    let as_flats = meet(&ProjFlat::new(plane.clone())?, &ProjFlat::new(bar(2))?).map(|f| f.blade().to_string());
    ex(out, "meet(plane, 2bar)", line_text, as_flats);

    let line = regressive(&plane, &bar(2))?;
    let line_bars = regressive(&(&(&bar(4) - &bar(3)) + &bar(1)), &bar(2))?;
    ex(out, "(-3bar+4bar+1bar).2bar", line_text, Ok(line_bars.to_string()));
    // the printed value here is 3-4; the text of the example reads 4-3, the
    // same point with the opposite sign
    ex(out, "line.1bar", "1*e{3}-1*e{4}", r(&line, &bar(1)));
    ex(out, "line.2bar", "0", r(&line, &bar(2)));
    ex(out, "line.3bar", "-1*e{1}-1*e{4}", r(&line, &bar(3)));
    ex(out, "line.4bar", "-1*e{1}-1*e{3}", r(&line, &bar(4)));

    let lambda = wedge_vectors(&[v(&[1, 0, 0, 0]), v(&[1, 1, 1, 1])])?;
    let mu = wedge_vectors(&[v(&[1, 1, 0, 0]), v(&[1, 0, 1, 1])])?;
    ex(out, "lambda", "1*e{1,2}+1*e{1,3}+1*e{1,4}", Ok(lambda.to_string()));
    ex(out, "lambda^mu", "0", lambda.wedge(&mu).map(|m| m.to_string()));
    let sum = "1*e{1,2,3}+1*e{1,2,4}";
    ex(out, "1^mu", sum, e(&[1]).wedge(&mu).map(|m| m.to_string()));
    let diag = Multivector::from_vector(&v(&[1, 1, 1, 1]))?;
    ex(out, "(1+2+3+4)^mu", "-1*e{1,2,3}-1*e{1,2,4}", diag.wedge(&mu).map(|m| m.to_string()));
    ex(out, "4bar+3bar", sum, Ok((&bar(4) + &bar(3)).to_string()));
    ex(out, "lambda.mu", "0", r(&lambda, &mu));

    let p32 = &bar(3) + &bar(2);
    let p34 = &bar(3) + &bar(4);
    ex(out, "-(3bar+2bar).(3bar+4bar)", &lambda.to_string(), regressive(&p32, &p34).map(|m| (-&m).to_string()));
    let lambda_bars = -&(&(&bars(&[3, 4])? + &bars(&[2, 4])?) + &bars(&[2, 3])?);
    ex(out, "-(3bar.4bar+2bar.4bar+2bar.3bar)", &lambda.to_string(), Ok(lambda_bars.to_string()));

    let written_mu = [bars(&[2, 4])?, bars(&[2, 3])?, -&bars(&[3, 4])?, bars(&[1, 4])?, bars(&[1, 3])?]
        .iter()
        .try_fold(Multivector::zero(q(), 4)?, |acc, t| acc.checked_add(t))?;
    ex(out, "written mu = -mu", &(-&mu).to_string(), Ok(written_mu.to_string()));
    let point = "2*e{1}+1*e{2}+1*e{3}+1*e{4}";
    ex(out, "written mu.(3bar+2bar)", point, r(&written_mu, &p32));
    ex(out, "written mu.(3bar+4bar)", "0", r(&written_mu, &p34));
    let hit = meet(&ProjFlat::new(lambda)?, &ProjFlat::new(mu)?)?;
    let same_point = ProjFlat::new(Multivector::from_vector(&v(&[2, 1, 1, 1]))?)?;
    ex(out, "meet(lambda, mu) as a point", "true", Ok((hit == same_point).to_string()));
    Ok(())
}

fn pappus_examples(out: &mut Vec<WorkedExample>) {
    for (a, c) in [(2, 3), (-1, 5), (3, -2), (7, 4)] {
        let (a, c) = (q().int(a), q().int(c));
        let name = format!("pappus diagonal points a={a} c={c}");
        let computed = pappus_symbolic(&a, &c).map(|why| why.unwrap_or_else(|| "ok".into()));
        ex(out, name, "ok", computed);
    }
    let gf = FieldSpec::prime(101).expect("prime");
    let (a, c) = (gf.int(5), gf.int(17));
    let computed = pappus_symbolic(&a, &c).map(|why| why.unwrap_or_else(|| "ok".into()));
    ex(out, "pappus diagonal points a=5 c=17 over gf:101", "ok", computed);
}

/// Every worked computation, in a fixed order.
pub fn all() -> Vec<WorkedExample> {
    let mut out = Vec::new();
    h_table(&mut out);
    bar_table(&mut out);
    if let Err(err) = space_examples(&mut out) {
        ex(&mut out, "space examples", "completed", Err(err));
    }
    pappus_examples(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_worked_example_matches() {
        let all = all();
        assert!(all.len() > 50);
        for w in &all {
            assert!(w.matches(), "{}: expected {}, got {:?}", w.name, w.expected, w.computed);
        }
    }
}
