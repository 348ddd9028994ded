//! JSON document schemas and their conversions to library values.
//!
//! Every emitter here round-trips: parsing what it wrote yields an equal
//! value. Parsing is strict — unknown fields are rejected so typos surface
//! as errors instead of silently changing meaning.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use steinberg_core::graph::{Graph, LassoPath};
use steinberg_core::groupoid::{Arrow, FiniteGroupoid};
use steinberg_core::pi::{CarrierLattice, Monomial, PiFunction};
use steinberg_core::ring::{RIdeal, RingElement, RingSpec};

/// Reads and parses a JSON file, keeping serde's line/column diagnostics.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// A coefficient ring: `{"kind":"Z"}`, `{"kind":"Zmod","n":6}`, or
/// `{"kind":"product","factors":[...]}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum RingDoc {
    #[serde(rename = "Z")]
    Z,
    #[serde(rename = "Zmod")]
    Zmod { n: u64 },
    #[serde(rename = "product")]
    Product { factors: Vec<RingDoc> },
}

impl RingDoc {
    pub fn to_spec(&self) -> Result<RingSpec> {
        let spec = self.build();
        spec.validate()?;
        Ok(spec)
    }

    fn build(&self) -> RingSpec {
        match self {
            RingDoc::Z => RingSpec::Z,
            RingDoc::Zmod { n } => RingSpec::Zmod(*n),
            RingDoc::Product { factors } => {
                RingSpec::Product(factors.iter().map(RingDoc::build).collect())
            }
        }
    }

    pub fn from_spec(spec: &RingSpec) -> RingDoc {
        match spec {
            RingSpec::Z => RingDoc::Z,
            RingSpec::Zmod(n) => RingDoc::Zmod { n: *n },
            RingSpec::Product(fs) => {
                RingDoc::Product { factors: fs.iter().map(RingDoc::from_spec).collect() }
            }
        }
    }
}

/// An ideal: `{"gen":g}` for `Z` or `Z/n`, `{"factors":[...]}` for products.
#[derive(Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealDoc {
    Gen(GenDoc),
    Factors(FactorsDoc),
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GenDoc {
    pub gen: i64,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorsDoc {
    pub factors: Vec<IdealDoc>,
}

impl IdealDoc {
    /// Interprets the document in `spec`, normalizing the generator.
    pub fn to_ideal(&self, spec: &RingSpec) -> Result<RIdeal> {
        match (self, spec) {
            (IdealDoc::Gen(g), RingSpec::Z) => Ok(RIdeal::integer(g.gen)),
            (IdealDoc::Gen(g), RingSpec::Zmod(n)) => {
                Ok(RIdeal::modular(*n, g.gen.rem_euclid(*n as i64) as u64))
            }
            (IdealDoc::Factors(fs), RingSpec::Product(specs)) => {
                if fs.factors.len() != specs.len() {
                    bail!(
                        "ideal document has {} factors but the ring has {}",
                        fs.factors.len(),
                        specs.len()
                    );
                }
                let factors = fs
                    .factors
                    .iter()
                    .zip(specs)
                    .map(|(doc, s)| doc.to_ideal(s))
                    .collect::<Result<Vec<_>>>()?;
                Ok(RIdeal::Product(factors))
            }
            (IdealDoc::Gen(_), _) => bail!("a product ring needs {{\"factors\":[...]}}"),
            (IdealDoc::Factors(_), _) => bail!("{{\"gen\":g}} expected for a non-product ring"),
        }
    }

    pub fn from_ideal(ideal: &RIdeal) -> IdealDoc {
        match ideal {
            RIdeal::Int(g) => IdealDoc::Gen(GenDoc { gen: *g as i64 }),
            RIdeal::Mod(d) => IdealDoc::Gen(GenDoc { gen: *d as i64 }),
            RIdeal::Product(fs) => IdealDoc::Factors(FactorsDoc {
                factors: fs.iter().map(IdealDoc::from_ideal).collect(),
            }),
        }
    }
}

/// A graph: named vertices and `src -> rng` edges.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDoc {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDoc>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDoc {
    pub name: String,
    pub src: String,
    pub rng: String,
}

impl GraphDoc {
    pub fn to_graph(&self) -> Result<Graph> {
        let edges = self
            .edges
            .iter()
            .map(|e| (e.name.clone(), e.src.clone(), e.rng.clone()))
            .collect();
        Ok(Graph::new(self.vertices.clone(), edges)?)
    }
}

/// A groupoid: unit names, non-unit morphisms with endpoints and inverses,
/// and the composition table for composable non-unit pairs.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupoidDoc {
    pub units: Vec<String>,
    pub morphisms: Vec<MorphismDoc>,
    pub compose: Vec<(String, String, String)>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub name: String,
    pub src: String,
    pub rng: String,
    pub inv: String,
}

impl GroupoidDoc {
    /// Builds and fully validates the groupoid (axioms included).
    pub fn to_groupoid(&self) -> Result<FiniteGroupoid> {
        let arrows = self
            .morphisms
            .iter()
            .map(|m| Arrow {
                name: m.name.clone(),
                src: m.src.clone(),
                rng: m.rng.clone(),
                inv: m.inv.clone(),
            })
            .collect();
        let g = FiniteGroupoid::new(self.units.clone(), arrows, self.compose.clone())?;
        g.require_valid()?;
        Ok(g)
    }
}

/// An ideal-valued lattice function: a ring and one entry per nonempty
/// saturated hereditary set, identified by its vertex list.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiDoc {
    pub ring: RingDoc,
    pub entries: Vec<PiEntryDoc>,
}

#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PiEntryDoc {
    #[serde(rename = "H")]
    pub h: Vec<String>,
    pub ideal: IdealDoc,
}

impl PiDoc {
    /// Resolves the document against a carrier. The entries must cover every
    /// nonempty lattice member exactly once, and the resulting function must
    /// satisfy the lattice laws.
    pub fn to_pi(&self, carrier: &CarrierLattice) -> Result<PiFunction> {
        let spec = self.ring.to_spec()?;
        let mut values: Vec<Option<RIdeal>> = vec![None; carrier.member_count() - 1];
        for entry in &self.entries {
            let idx = carrier.member_from_names(&entry.h)?;
            if idx == 0 {
                bail!("the empty set takes no value; list only nonempty members");
            }
            if values[idx - 1].is_some() {
                bail!("member {} is listed twice", carrier.member_label(idx));
            }
            values[idx - 1] = Some(entry.ideal.to_ideal(&spec)?);
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| {
                v.ok_or_else(|| {
                    anyhow!("no entry for lattice member {}", carrier.member_label(i + 1))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pi = PiFunction::new(spec, values, carrier)?;
        if let Some(violation) = pi.validate(carrier).first() {
            bail!("invalid lattice function: {}", violation.render(carrier, &pi));
        }
        Ok(pi)
    }

    pub fn from_pi(pi: &PiFunction, carrier: &CarrierLattice) -> PiDoc {
        let entries = (1..carrier.member_count())
            .map(|i| {
                let mask = carrier.member_mask(i);
                let h = (0..carrier.point_count())
                    .filter(|p| mask & (1 << p) != 0)
                    .map(|p| carrier.point_name(p).to_string())
                    .collect();
                PiEntryDoc { h, ideal: IdealDoc::from_ideal(pi.value(i)) }
            })
            .collect();
        PiDoc { ring: RingDoc::from_spec(pi.ring()), entries }
    }
}

/// A monomial `r·μν*`: an integer coefficient (mapped diagonally into the
/// ring) and two paths given as edge-name lists.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialDoc {
    pub coeff: i64,
    pub mu: Vec<String>,
    pub nu: Vec<String>,
}

/// The image of an integer under the unique ring map from `Z`.
pub fn int_element(spec: &RingSpec, c: i64) -> RingElement {
    match spec {
        RingSpec::Z => RingElement::Int(c),
        RingSpec::Zmod(n) => RingElement::Mod(c.rem_euclid(*n as i64) as u64),
        RingSpec::Product(fs) => {
            RingElement::Tuple(fs.iter().map(|f| int_element(f, c)).collect())
        }
    }
}

impl MonomialDoc {
    pub fn to_monomial(&self, graph: &Graph, spec: &RingSpec) -> Result<Monomial> {
        let resolve = |names: &[String]| -> Result<Vec<usize>> {
            names
                .iter()
                .map(|n| graph.edge_index(n).ok_or_else(|| anyhow!("unknown edge {n:?}")))
                .collect()
        };
        Ok(Monomial {
            coeff: int_element(spec, self.coeff),
            mu: resolve(&self.mu)?,
            nu: resolve(&self.nu)?,
        })
    }
}

/// An eventually periodic path: a finite stem followed by a repeated cycle,
/// both as edge-name lists in traversal order.
#[derive(Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LassoDoc {
    pub stem: Vec<String>,
    pub cycle: Vec<String>,
}

impl LassoDoc {
    pub fn to_lasso(&self, graph: &Graph) -> Result<LassoPath> {
        let resolve = |names: &[String]| -> Result<Vec<usize>> {
            names
                .iter()
                .map(|n| graph.edge_index(n).ok_or_else(|| anyhow!("unknown edge {n:?}")))
                .collect()
        };
        let lasso = LassoPath { stem: resolve(&self.stem)?, cycle: resolve(&self.cycle)? };
        graph.validate_lasso(&lasso)?;
        Ok(lasso)
    }
}
