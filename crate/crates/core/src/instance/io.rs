//! JSON instance and solution documents.
//!
//! Instance: `{"metric":"l1"|"l2","c1":[x,y],"c2":[x,y],"points":[[x,y],...],"pairs":[[i,j],...]}`
//! with `pairs` optional and an optional free-form `meta` object.
//!
//! Solution: `{"algorithm":..,"assignment":[1|2,..],"weight1":..,"weight2":..,"objective":..,
//! "structure1":[[i,j],..],"structure2":[[i,j],..],"meta":{..}}`; index `-1` is the side's site.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::{Assignment, Instance, InstanceError, Solution, Structure};
use crate::geometry::{Metric, Point};

#[derive(Serialize, Deserialize)]
struct InstanceDoc {
    metric: Metric,
    c1: Point,
    c2: Point,
    points: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pairs: Option<Vec<[usize; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Value>,
}

fn malformed(e: serde_json::Error) -> InstanceError {
    InstanceError::Malformed {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parses an instance document and returns its `meta` block, if any.
pub fn parse_instance_document(text: &[u8]) -> Result<(Instance, Option<Value>), InstanceError> {
    let doc: InstanceDoc = serde_json::from_slice(text).map_err(malformed)?;
    let mut instance = Instance::new(doc.points, doc.c1, doc.c2, doc.metric)?;
    if let Some(pairs) = doc.pairs {
        instance = instance.with_pairs(pairs.into_iter().map(|[i, j]| (i, j)).collect())?;
    }
    Ok((instance, doc.meta))
}

pub fn parse_instance(text: &[u8]) -> Result<Instance, InstanceError> {
    parse_instance_document(text).map(|(instance, _)| instance)
}

pub fn instance_document(instance: &Instance, meta: Option<Value>) -> Value {
    let doc = InstanceDoc {
        metric: instance.metric(),
        c1: instance.c1(),
        c2: instance.c2(),
        points: instance.points().to_vec(),
        pairs: instance.pairs().map(|p| p.iter().map(|&(i, j)| [i, j]).collect()),
        meta,
    };
    serde_json::to_value(doc).expect("instance document serializes")
}

/// Pretty-printed instance document with a trailing newline.
pub fn instance_to_json(instance: &Instance, meta: Option<Value>) -> String {
    let mut s = serde_json::to_string_pretty(&instance_document(instance, meta)).expect("serializable");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub algorithm: String,
    pub assignment: Vec<i64>,
    pub weight1: f64,
    pub weight2: f64,
    pub objective: f64,
    pub structure1: Vec<[i64; 2]>,
    pub structure2: Vec<[i64; 2]>,
    #[serde(default)]
    pub meta: Map<String, Value>,
}

impl SolutionDocument {
    pub fn from_solution(solution: &Solution) -> Self {
        let edges = |s: &Structure| s.edge_list().into_iter().map(|(u, v)| [u, v]).collect();
        let mut meta = solution.meta.clone();
        for (key, s) in [("tour1", &solution.structure1), ("tour2", &solution.structure2)] {
            if let Structure::Tour(t) = s {
                meta.insert(key.into(), Value::from(t.clone()));
            }
        }
        SolutionDocument {
            algorithm: solution.algorithm.clone(),
            assignment: solution.assignment.labels().into_iter().map(i64::from).collect(),
            weight1: solution.weight1,
            weight2: solution.weight2,
            objective: solution.objective,
            structure1: edges(&solution.structure1),
            structure2: edges(&solution.structure2),
            meta,
        }
    }

    pub fn assignment(&self) -> Result<Assignment, InstanceError> {
        Assignment::from_labels(&self.assignment)
    }

    /// The stored solution with edge-list structures and the stated weights.
    pub fn to_solution(&self) -> Result<Solution, InstanceError> {
        let edges = |e: &[[i64; 2]]| Structure::Edges(e.iter().map(|&[u, v]| (u, v)).collect());
        Ok(Solution {
            assignment: self.assignment()?,
            structure1: edges(&self.structure1),
            structure2: edges(&self.structure2),
            weight1: self.weight1,
            weight2: self.weight2,
            objective: self.objective,
            algorithm: self.algorithm.clone(),
            meta: self.meta.clone(),
        })
    }
}

pub fn parse_solution(text: &[u8]) -> Result<SolutionDocument, InstanceError> {
    serde_json::from_slice(text).map_err(malformed)
}

pub fn solution_to_json(solution: &Solution) -> String {
    let mut s = serde_json::to_string_pretty(&SolutionDocument::from_solution(solution)).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_document() {
        let text = br#"{"metric":"l2","c1":[0,0],"c2":[1,1],"points":[[0.5,0],[2,3]]}"#;
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.n(), 1);
        assert_eq!(inst.metric(), Metric::L2);
        assert!(inst.pairs().is_none());
    }

    #[test]
    fn odd_point_count_is_reported() {
        let text = br#"{"metric":"l1","c1":[0,0],"c2":[1,1],"points":[[0,0],[1,0],[2,0]]}"#;
        let err = parse_instance(text).unwrap_err();
        assert_eq!(err, InstanceError::OddPointCount { count: 3 });
        assert!(err.to_string().contains("odd point count"));
    }

    #[test]
    fn malformed_json_has_a_location() {
        let text = b"{\"metric\":\"l1\",\n\"c1\":[0,0],\n\"c2\":[1,oops]}";
        match parse_instance(text).unwrap_err() {
            InstanceError::Malformed { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let bad_metric = br#"{"metric":"l3","c1":[0,0],"c2":[1,1],"points":[[0,0],[1,0]]}"#;
        assert!(matches!(parse_instance(bad_metric), Err(InstanceError::Malformed { .. })));
    }

    #[test]
    fn overlapping_pairs_rejected() {
        let text = br#"{"metric":"l2","c1":[0,0],"c2":[1,1],"points":[[0,0],[1,0],[2,0],[3,0]],"pairs":[[0,1],[1,2]]}"#;
        let err = parse_instance(text).unwrap_err();
        assert_eq!(err, InstanceError::OverlappingPairs { pair: 1, index: 1 });
        assert!(err.to_string().contains("$.pairs[1]"));
    }

    #[test]
    fn meta_block_survives() {
        let text = br#"{"metric":"l2","c1":[0,0],"c2":[1,1],"points":[[0,0],[1,0]],"meta":{"target":14}}"#;
        let (inst, meta) = parse_instance_document(text).unwrap();
        let again = instance_to_json(&inst, meta.clone());
        let (inst2, meta2) = parse_instance_document(again.as_bytes()).unwrap();
        assert_eq!(inst, inst2);
        assert_eq!(meta2.unwrap()["target"], 14);
    }
}
