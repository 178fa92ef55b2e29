use std::collections::BTreeMap;

use prufer_core::rep::{ModHom, Rep};
use prufer_core::{Field, Mat};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub claim: String,
    pub status: Status,
    /// The operation whose output was checked.
    pub operation: String,
    pub evidence: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Claim>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, Value>,
    #[serde(skip)]
    emit_matrices: bool,
}

/// Outcome of one check: evidence on success, the reason on failure.
pub type Outcome = Result<String, String>;

pub fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

impl Report {
    pub fn new(scenario: &str, emit_matrices: bool) -> Self {
        Report {
            scenario: scenario.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            matrices: BTreeMap::new(),
            emit_matrices,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn record(&mut self, claim: impl Into<String>, operation: &str, outcome: Outcome) -> bool {
        let (status, evidence) = match outcome {
            Ok(e) => (Status::Pass, e),
            Err(e) => (Status::Fail, e),
        };
        self.results.push(Claim { claim: claim.into(), status, operation: operation.to_string(), evidence });
        status == Status::Pass
    }

    /// Records a claim that holds exactly when `ok`.
    pub fn assert(&mut self, claim: impl Into<String>, operation: &str, ok: bool, evidence: impl Into<String>) -> bool {
        let evidence = evidence.into();
        self.record(claim, operation, if ok { Ok(evidence) } else { Err(evidence) })
    }

    pub fn emits_matrices(&self) -> bool {
        self.emit_matrices
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|c| c.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Claim> {
        self.results.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn module<F: Field>(&mut self, name: &str, m: &Rep<F>) {
        if self.emit_matrices {
            self.matrices.insert(name.to_string(), rep_json(m));
        }
    }

    pub fn hom<F: Field>(&mut self, name: &str, f: &ModHom<F>) {
        if self.emit_matrices {
            self.matrices.insert(name.to_string(), hom_json(f));
        }
    }

    /// Folds the claims of `other` into this report, prefixing their names.
    pub fn absorb(&mut self, other: Report) {
        for mut c in other.results {
            c.claim = format!("{}: {}", other.scenario, c.claim);
            self.results.push(c);
        }
        for (k, v) in other.matrices {
            self.matrices.insert(format!("{}/{k}", other.scenario), v);
        }
    }
}

pub fn mat_json<F: Field>(m: &Mat<F>) -> Value {
    let k = m.field();
    let rows: Vec<Vec<String>> = (0..m.rows()).map(|r| m.row(r).iter().map(|x| k.format(x)).collect()).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn rep_json<F: Field>(m: &Rep<F>) -> Value {
    let q = m.algebra().quiver();
    let actions: BTreeMap<&str, Value> =
        q.arrows().iter().zip(m.actions()).map(|(a, mat)| (a.name.as_str(), mat_json(mat))).collect();
    json!({ "dims": m.dims(), "actions": actions })
}

pub fn hom_json<F: Field>(f: &ModHom<F>) -> Value {
    let q = f.source().algebra().quiver();
    let blocks: BTreeMap<&str, Value> =
        q.vertices().iter().zip(f.blocks()).map(|(v, b)| (v.as_str(), mat_json(b))).collect();
    json!({ "source_dims": f.source().dims(), "target_dims": f.target().dims(), "blocks": blocks })
}
