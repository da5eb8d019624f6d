//! Itemized pass/fail records.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// Where an identity fails: the basis indices involved and a readable
/// account of the offending value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomVerdict {
    pub id: String,
    pub description: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

/// Verdicts for every axiom of one structure, plus informational
/// properties that do not affect `pass`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub structure: String,
    pub axioms: Vec<AxiomVerdict>,
    pub properties: BTreeMap<String, String>,
    pub pass: bool,
}

impl StructureReport {
    pub fn new(structure: impl Into<String>) -> Self {
        StructureReport {
            structure: structure.into(),
            axioms: Vec::new(),
            properties: BTreeMap::new(),
            pass: true,
        }
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        description: impl Into<String>,
        witness: Option<Witness>,
    ) {
        let pass = witness.is_none();
        self.pass &= pass;
        self.axioms.push(AxiomVerdict {
            id: id.into(),
            description: description.into(),
            pass,
            witness,
        });
    }

    pub fn property(&mut self, key: impl Into<String>, value: impl ToString) {
        self.properties.insert(key.into(), value.to_string());
    }

    pub fn axiom(&self, id: &str) -> Option<&AxiomVerdict> {
        self.axioms.iter().find(|a| a.id == id)
    }

    /// Ids of the failing axioms, in check order.
    pub fn failing(&self) -> Vec<&str> {
        self.axioms
            .iter()
            .filter(|a| !a.pass)
            .map(|a| a.id.as_str())
            .collect()
    }

    /// Appends all verdicts of `other`, prefixing their ids.
    pub fn absorb(&mut self, prefix: &str, other: StructureReport) {
        for a in other.axioms {
            let id = format!("{prefix}.{}", a.id);
            self.push(id, a.description, a.witness);
        }
        for (k, v) in other.properties {
            self.properties.insert(format!("{prefix}.{k}"), v);
        }
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}: {}",
            self.structure,
            if self.pass { "PASS" } else { "FAIL" }
        )?;
        for a in &self.axioms {
            writeln!(
                f,
                "  [{}] {} - {}",
                if a.pass { "ok" } else { "FAIL" },
                a.id,
                a.description
            )?;
            if let Some(w) = &a.witness {
                writeln!(f, "      witness {:?}: {}", w.indices, w.detail)?;
            }
        }
        for (k, v) in &self.properties {
            writeln!(f, "  {k} = {v}")?;
        }
        Ok(())
    }
}
