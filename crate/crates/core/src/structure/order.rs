use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use super::model::StructureModel;
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SmaleOrder {
    /// A linear extension of the relation, ties broken by ascending id.
    /// `unique` is false when some step had more than one candidate.
    Order { ids: Vec<String>, unique: bool },
    /// A cycle `c[0] ≺ c[1] ≺ ... ≺ c[0]`, rotated to start at its smallest id.
    Cycle(Vec<String>),
}

/// Topologically sorts the basic sets of `model` along its relation.
/// Self-relations are ignored: every basic set is related to itself.
pub fn smale_order(model: &StructureModel) -> Result<SmaleOrder> {
    model.validate()?;
    let ids: Vec<&str> = model.basic_sets.iter().map(|b| b.id.as_str()).collect();
    let edges: BTreeSet<(&str, &str)> =
        model.relations.iter().filter(|(a, b)| a != b).map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Ok(order_graph(&ids, &edges))
}

pub(crate) fn order_graph(ids: &[&str], edges: &BTreeSet<(&str, &str)>) -> SmaleOrder {
    let mut indeg: BTreeMap<&str, usize> = ids.iter().map(|&i| (i, 0)).collect();
    let mut succ: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    let mut pred: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for &(a, b) in edges {
        *indeg.get_mut(b).expect("known id") += 1;
        succ.entry(a).or_default().push(b);
        pred.entry(b).or_default().push(a);
    }
    let mut ready: BTreeSet<&str> = indeg.iter().filter(|(_, &d)| d == 0).map(|(&i, _)| i).collect();
    let mut out = Vec::with_capacity(ids.len());
    let mut unique = true;
    while let Some(&next) = ready.iter().next() {
        if ready.len() > 1 {
            unique = false;
        }
        ready.remove(next);
        out.push(String::from(next));
        for &s in succ.get(next).map(Vec::as_slice).unwrap_or(&[]) {
            let d = indeg.get_mut(s).expect("known id");
            *d -= 1;
            if *d == 0 {
                ready.insert(s);
            }
        }
    }
    if out.len() == ids.len() {
        return SmaleOrder::Order { ids: out, unique };
    }
    // every remaining node has a remaining predecessor; walk back until a repeat
    let remaining: BTreeSet<&str> = indeg.iter().filter(|(_, &d)| d > 0).map(|(&i, _)| i).collect();
    let mut walk: Vec<&str> = Vec::new();
    let mut pos: BTreeMap<&str, usize> = BTreeMap::new();
    let mut cur = *remaining.iter().next().expect("stalled sort leaves nodes");
    while !pos.contains_key(cur) {
        pos.insert(cur, walk.len());
        walk.push(cur);
        cur = pred[cur].iter().copied().filter(|p| remaining.contains(p)).min().expect("remaining predecessor");
    }
    let mut cycle: Vec<&str> = walk[pos[cur]..].to_vec();
    cycle.reverse();
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap_or(0);
    cycle.rotate_left(start);
    SmaleOrder::Cycle(cycle.into_iter().map(String::from).collect())
}
