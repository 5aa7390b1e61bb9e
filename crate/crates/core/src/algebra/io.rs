//! JSON and CSV forms of polynomials, extension elements and q-fractions.
//!
//! A polynomial is `{"vars": [...], "terms": [{"exp": [...], "coef": "..."}]}`
//! with coefficients as decimal strings. Extension elements add `"gens"` and
//! append one 0/1 entry per generator to every `exp`.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::ext::{ExtElement, ExtensionContext};
use super::poly::LaurentPoly;
use super::qfrac::QFraction;
use super::var::{Roster, Var, NVARS};
use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub coef: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gens: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QFractionJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

fn term(p: &LaurentPoly, e: &[i32; NVARS], c: &BigInt, gens: &[i32]) -> TermJson {
    let mut exp: Vec<i32> = p.roster().vars().map(|v| e[v.index()]).collect();
    exp.extend_from_slice(gens);
    TermJson {
        exp,
        coef: c.to_string(),
    }
}

impl From<&LaurentPoly> for PolyJson {
    fn from(p: &LaurentPoly) -> Self {
        PolyJson {
            vars: p.roster().vars().map(|v| v.name().to_string()).collect(),
            terms: p.terms().map(|(e, c)| term(p, e, c, &[])).collect(),
            gens: None,
        }
    }
}

impl TryFrom<&PolyJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self, Error> {
        if j.gens.as_ref().is_some_and(|g| !g.is_empty()) {
            return Err(Error::Parse(
                "polynomial JSON must not carry generators".into(),
            ));
        }
        let vars = j
            .vars
            .iter()
            .map(|n| Var::from_name(n))
            .collect::<Result<Vec<_>, _>>()?;
        let roster = Roster::new(&vars);
        if roster.len() != vars.len() {
            return Err(Error::Parse("duplicate variable".into()));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            if t.exp.len() != vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector {:?} has wrong length",
                    t.exp
                )));
            }
            let mut e = [0; NVARS];
            for (v, d) in vars.iter().zip(&t.exp) {
                e[v.index()] = *d;
            }
            let c: BigInt = t
                .coef
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coef)))?;
            terms.push((e, c));
        }
        LaurentPoly::from_terms(roster, terms)
    }
}

pub fn poly_to_json(p: &LaurentPoly) -> String {
    serde_json::to_string(&PolyJson::from(p)).expect("serializable")
}

pub fn poly_from_json(s: &str) -> Result<LaurentPoly, Error> {
    let j: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    LaurentPoly::try_from(&j)
}

pub fn ext_to_json(e: &ExtElement, ctx: &ExtensionContext) -> PolyJson {
    let ngens = ctx.generators().len();
    let mut terms = Vec::new();
    for (mask, p) in e.parts() {
        let bits: Vec<i32> = (0..ngens).map(|k| i32::from(mask >> k & 1)).collect();
        terms.extend(p.terms().map(|(ex, c)| term(p, ex, c, &bits)));
    }
    PolyJson {
        vars: e.roster().vars().map(|v| v.name().to_string()).collect(),
        terms,
        gens: Some(ctx.generators().iter().map(|g| g.name.clone()).collect()),
    }
}

pub fn qfraction_to_json(f: &QFraction, ctx: &ExtensionContext) -> QFractionJson {
    QFractionJson {
        num: ext_to_json(f.num(), ctx),
        den: PolyJson::from(&f.den_poly()),
    }
}

/// CSV with one exponent column per roster variable followed by `coef`.
pub fn poly_to_csv(p: &LaurentPoly) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<String> = p.roster().vars().map(|v| v.name().to_string()).collect();
    header.push("coef".into());
    w.write_record(&header).expect("in-memory write");
    for (e, c) in p.terms() {
        let mut row: Vec<String> = p
            .roster()
            .vars()
            .map(|v| e[v.index()].to_string())
            .collect();
        row.push(c.to_string());
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let r = Roster::STQ;
        let p = (LaurentPoly::var(Var::S, r) - LaurentPoly::var(Var::Q, r)).pow(3);
        let s = poly_to_json(&p);
        assert_eq!(poly_from_json(&s).unwrap(), p);
    }

    #[test]
    fn json_rejects_garbage() {
        assert!(poly_from_json(r#"{"vars":["x"],"terms":[]}"#).is_err());
        assert!(poly_from_json(r#"{"vars":["q"],"terms":[{"exp":[1,2],"coef":"1"}]}"#).is_err());
        assert!(poly_from_json(r#"{"vars":["q"],"terms":[{"exp":[1],"coef":"x"}]}"#).is_err());
    }

    #[test]
    fn csv_layout() {
        let r = Roster::Q;
        let p = LaurentPoly::one(r) + LaurentPoly::var(Var::Q, r).scale(&BigInt::from(3));
        assert_eq!(poly_to_csv(&p), "q,coef\n0,1\n1,3\n");
    }
}
