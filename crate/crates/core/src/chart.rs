//! Self-contained JSON form of lifting charts.
//!
//! ```json
//! {"schema_version": 1,
//!  "ring": {"vars": ["x0", "x1", "x2", "x3"]},
//!  "problem": {"Iprime": ["x0", "x1^2"], "hp": "2*t + 2"},
//!  "charts": [{"J": ["x0^2", "x0*x1", "x1^2", "x0*x2"],
//!              "family": [{"head": "x0^2",
//!                          "tail": [{"term": "x1*x2", "coeff_poly": "C[x0^2][x1*x2]"}]}],
//!              "constraints": ["C[x0^2][x1*x2]"],
//!              "provenance": ["NF(f[x0^2])"]}]}
//! ```
//!
//! Marked charts carry `"m"`. Parameters are named by the coefficient
//! strings in order of first appearance; constraints whose provenance starts
//! with `NF(` come from the comparison with `I'`.

use std::cell::RefCell;

use serde::{Deserialize, Serialize};

use crate::algebra::{Alphabet, FieldPoly, Monomial, ParamPoly, Ring};
use crate::error::{Error, Result};
use crate::hilbert::HilbertPoly;
use crate::lifting::{LiftingChart, LiftingProblem};
use crate::monomial_ideal::MonomialIdeal;
use crate::parametric::{ConstraintIdeal, Flavor, MarkedPoly, MarkedSet};
use crate::parse::{parse_in_alphabet, parse_list_with, parse_poly_with, parse_term_in};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartFile {
    pub schema_version: u32,
    pub ring: RingJson,
    pub problem: ProblemJson,
    pub charts: Vec<ChartJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RingJson {
    pub vars: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProblemJson {
    #[serde(rename = "Iprime")]
    pub iprime: Vec<String>,
    pub hp: HilbertPoly,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ChartJson {
    #[serde(rename = "J")]
    pub j: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    pub family: Vec<FamilyEntry>,
    pub constraints: Vec<String>,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyEntry {
    pub head: String,
    pub tail: Vec<TailEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TailEntry {
    pub term: String,
    pub coeff_poly: String,
}

impl ChartFile {
    pub fn new(problem: &LiftingProblem, charts: &[LiftingChart]) -> Self {
        let names = problem.ring().names();
        let section = &names[..names.len() - 1];
        ChartFile {
            schema_version: SCHEMA_VERSION,
            ring: RingJson {
                vars: names.to_vec(),
            },
            problem: ProblemJson {
                iprime: problem
                    .iprime()
                    .polys()
                    .iter()
                    .map(|g| g.to_string_with(section, &[]))
                    .collect(),
                hp: problem.hp().clone(),
            },
            charts: charts.iter().map(|c| chart_json(c, names)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("chart files serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: ChartFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("chart file line {}: {}", e.line(), e),
        })?;
        if file.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("unsupported schema version {}", file.schema_version),
            });
        }
        Ok(file)
    }

    pub fn ring(&self) -> Ring {
        Ring::with_names(self.ring.vars.clone())
    }

    /// Generators of `I'` in the section ring.
    pub fn iprime(&self) -> Result<Vec<FieldPoly>> {
        let section = self.ring().section();
        let resolve = |n: &str| section.names().iter().position(|v| v == n);
        self.problem
            .iprime
            .iter()
            .map(|s| parse_poly_with(s, &resolve))
            .collect()
    }

    pub fn problem(&self) -> Result<LiftingProblem> {
        LiftingProblem::new(self.ring(), &self.iprime()?, self.problem.hp.clone())
    }

    /// Rebuilds every chart without recomputation.
    pub fn charts(&self) -> Result<Vec<LiftingChart>> {
        let ring = self.ring();
        self.charts.iter().map(|c| read_chart(c, &ring)).collect()
    }
}

fn chart_json(chart: &LiftingChart, names: &[String]) -> ChartJson {
    let params = chart.family.alphabet().names();
    ChartJson {
        j: chart.j.gens().iter().map(|g| g.display_with(names).to_string()).collect(),
        m: chart.m,
        family: chart
            .family
            .polys()
            .iter()
            .map(|p| FamilyEntry {
                head: p.head.display_with(names).to_string(),
                tail: p
                    .tail
                    .terms()
                    .iter()
                    .map(|(t, c)| TailEntry {
                        term: t.display_with(names).to_string(),
                        coeff_poly: c.to_string_with(params, &[]),
                    })
                    .collect(),
            })
            .collect(),
        constraints: chart.constraints.gen_strings(),
        provenance: chart.constraints.provenance().to_vec(),
    }
}

fn read_chart(c: &ChartJson, ring: &Ring) -> Result<LiftingChart> {
    let n = ring.nvars();
    let gens: Vec<Monomial> = c.j.iter().map(|s| parse_term_in(s, ring)).collect::<Result<_>>()?;
    let j = MonomialIdeal::new(n, gens);
    // parameters are registered in order of first appearance
    let alphabet = RefCell::new(Alphabet::default());
    let resolve = |name: &str| {
        let mut a = alphabet.borrow_mut();
        Some(match a.get(name) {
            Some(k) => k,
            None => a.push(name.to_string()),
        })
    };
    let mut polys = Vec::with_capacity(c.family.len());
    for entry in &c.family {
        let head = parse_term_in(&entry.head, ring)?;
        let mut tail = Vec::with_capacity(entry.tail.len());
        for t in &entry.tail {
            let term = parse_term_in(&t.term, ring)?;
            let coeff = parse_list_with(&t.coeff_poly, &resolve)?;
            let [coeff] = <[FieldPoly; 1]>::try_from(coeff).map_err(|_| Error::Parse {
                pos: 0,
                msg: format!("bad coefficient '{}'", t.coeff_poly),
            })?;
            tail.push((term, coeff));
        }
        polys.push(MarkedPoly {
            head,
            tail: ParamPoly::from_terms(tail),
        });
    }
    let alphabet = alphabet.into_inner();
    if c.constraints.len() != c.provenance.len() {
        return Err(Error::Parse {
            pos: 0,
            msg: "constraints and provenance differ in length".into(),
        });
    }
    let mut constraints = ConstraintIdeal::new(alphabet.clone());
    let mut section = ConstraintIdeal::new(alphabet.clone());
    for (g, tag) in c.constraints.iter().zip(&c.provenance) {
        let g = parse_in_alphabet(g, &alphabet)?;
        constraints.push(&g, tag);
        if tag.starts_with("NF(") {
            section.push(&g, tag);
        }
    }
    let (heads, flavor) = match c.m {
        Some(m) => (j.truncate(m.saturating_sub(1)), Flavor::Marked),
        None => (j.clone(), Flavor::Stratum),
    };
    Ok(LiftingChart {
        j,
        m: c.m,
        family: MarkedSet::from_parts(n, heads, polys, alphabet, flavor),
        constraints,
        section_constraints: section,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lifting::{lifting_gs, lifting_ms};
    use crate::parse::parse_polys;

    fn problem() -> LiftingProblem {
        let ip = parse_polys("x0, x1^2", 3).unwrap();
        LiftingProblem::new(Ring::new(4), &ip, HilbertPoly::from_ints(&[2, 2])).unwrap()
    }

    #[test]
    fn round_trip_preserves_charts() {
        let pb = problem();
        let mut charts = lifting_gs(&pb).unwrap();
        charts.extend(lifting_ms(&pb).unwrap());
        let file = ChartFile::new(&pb, &charts);
        let text = file.to_json();
        let back = ChartFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        let rebuilt = back.charts().unwrap();
        for (a, b) in charts.iter().zip(&rebuilt) {
            assert_eq!(a.j, b.j);
            assert_eq!(a.m, b.m);
            assert_eq!(a.family.polys(), b.family.polys());
            assert_eq!(a.family.alphabet(), b.family.alphabet());
            assert_eq!(a.constraints.gens(), b.constraints.gens());
            assert_eq!(a.section_constraints.gens(), b.section_constraints.gens());
            assert_eq!(a.family.head_ideal(), b.family.head_ideal());
        }
        assert_eq!(back.problem().unwrap().iprime(), pb.iprime());
    }

    #[test]
    fn rejects_other_versions() {
        let pb = problem();
        let mut file = ChartFile::new(&pb, &[]);
        file.schema_version = 99;
        assert!(ChartFile::from_json(&file.to_json()).is_err());
        assert!(ChartFile::from_json("{").is_err());
    }
}
