use std::fmt::Write as _;

use rand::Rng;

use super::{ConcurrentFlow, Embedding};

/// Per host vertex: how many branch sets contain it as the bucket vertex
/// (type 0), on a sampled path of the smaller-bucket endpoint (type 1), or
/// of the larger-bucket endpoint (type 2). Counted over working vertices;
/// isolated vertices add to type 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongestionAudit {
    pub type0: Vec<usize>,
    pub type1: Vec<usize>,
    pub type2: Vec<usize>,
}

impl CongestionAudit {
    pub fn max_type1(&self) -> usize {
        self.type1.iter().copied().max().unwrap_or(0)
    }

    pub fn max_type2(&self) -> usize {
        self.type2.iter().copied().max().unwrap_or(0)
    }
}

pub fn audit_congestion(e: &Embedding) -> CongestionAudit {
    let size = e.host.vertex_count();
    let mut type0 = vec![0; size];
    for &w in e.zeta.iter().chain(&e.isolated_hosts) {
        type0[w] += 1;
    }
    let n_work = e.zeta.len();
    let mut on1 = vec![Vec::new(); n_work];
    let mut on2 = vec![Vec::new(); n_work];
    for s in &e.sampled {
        on1[s.x].extend(&s.path_x);
        on2[s.y].extend(&s.path_y);
    }
    CongestionAudit { type0, type1: membership_counts(size, on1), type2: membership_counts(size, on2) }
}

fn membership_counts(size: usize, sets: Vec<Vec<usize>>) -> Vec<usize> {
    let mut counts = vec![0; size];
    for mut set in sets {
        set.sort_unstable();
        set.dedup();
        for w in set {
            counts[w] += 1;
        }
    }
    counts
}

/// Tab-separated `vertex type0 type1 type2` rows with a header.
pub fn write_audit(audit: &CongestionAudit) -> String {
    let mut out = String::from("vertex\ttype0\ttype1\ttype2\n");
    for w in 0..audit.type0.len() {
        let _ = writeln!(out, "{w}\t{}\t{}\t{}", audit.type0[w], audit.type1[w], audit.type2[w]);
    }
    out
}

/// The path family of the sampling claim: for every host vertex `x` and
/// each of `p` rounds, a uniform target `y` and a path drawn from
/// `f_{x,y}`. Returns the number of paths through each vertex.
pub fn sample_path_family<R: Rng + ?Sized>(flow: &ConcurrentFlow, p: usize, rng: &mut R) -> Vec<usize> {
    let l = flow.host.vertex_count();
    let mut hits = vec![0; l];
    for x in 0..l {
        for _ in 0..p {
            let y = rng.gen_range(0..l);
            for &w in flow.sample_path(x, y, rng) {
                hits[w] += 1;
            }
        }
    }
    hits
}
