use std::fmt::Write as _;

use super::{build_f_maps, build_gadget, choose_prime, GadgetError, GadgetParams, WLayout};
use crate::config::Caps;
use crate::graph::Graph;
use crate::instances::{DualCmcInstance, PsiInstance};

/// Provenance of one color: pattern edge `alpha` (1-based, as written to
/// gadget map files) realized by host edge `v_x v_y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GadgetLabel {
    pub alpha: usize,
    pub vx: usize,
    pub vy: usize,
}

/// Output of [`reduce_psi_to_dcmc`] with everything needed to decode
/// witnesses in both directions.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub psi: PsiInstance,
    pub params: GadgetParams,
    pub layout: WLayout,
    /// `labels[i]` describes color `i + 1`.
    pub labels: Vec<GadgetLabel>,
    pub dual: DualCmcInstance,
}

/// Builds the DCMC instance with `|W| = 1 + h (ρ (b+1))^a`, one graph per
/// host edge (colors follow the canonical host edge order) and budget `a`.
pub fn reduce_psi_to_dcmc(inst: &PsiInstance, caps: &Caps) -> Result<Reduction, GadgetError> {
    let pattern = inst.pattern();
    let a = pattern.edge_count();
    if a == 0 {
        return Err(GadgetError::EmptyPattern);
    }
    if !pattern.is_connected() {
        return Err(GadgetError::PatternDisconnected);
    }
    let n = inst.block_size();
    let h = pattern.vertex_count();
    let rho = choose_prime(n, a)?;
    let b = 2 * a;
    let layout = WLayout { rho, b, a, h };
    let size = layout.total_u128();
    if size > caps.gadget_vertices {
        return Err(GadgetError::TooLarge { size, cap: caps.gadget_vertices });
    }
    let params = GadgetParams {
        rho,
        a,
        b,
        h,
        n,
        edge_order: pattern.edges().to_vec(),
        f_maps: build_f_maps(inst, rho, a),
    };
    let mut labels = Vec::with_capacity(inst.host().edge_count());
    let mut graphs = Vec::with_capacity(inst.host().edge_count());
    for &(u, v) in inst.host().edges() {
        let (bu, bv) = (inst.block_of(u), inst.block_of(v));
        let (vx, vy) = if bu < bv { (u, v) } else { (v, u) };
        let alpha = params
            .edge_order
            .binary_search(&(bu.min(bv), bu.max(bv)))
            .expect("host edges follow pattern edges");
        let gadget = build_gadget(alpha, vx, vy, &params, &layout);
        labels.push(GadgetLabel { alpha: alpha + 1, vx, vy });
        graphs.push(gadget.edges);
    }
    let dual = DualCmcInstance::new(layout.total(), graphs, a).expect("gadget edges lie inside W");
    Ok(Reduction { psi: inst.clone(), params, layout, labels, dual })
}

impl Reduction {
    /// `f̂_x(v)` for host vertex `v`.
    pub fn image(&self, v: usize) -> usize {
        self.layout.hat(self.psi.block_of(v), &self.params.f_maps[v])
    }

    /// The 1-based colors of the gadgets realizing a PSI witness (one host
    /// vertex per pattern vertex), in pattern-edge order.
    pub fn selection_for(&self, witness: &[usize]) -> Result<Vec<usize>, GadgetError> {
        self.params
            .edge_order
            .iter()
            .map(|&(x, y)| {
                let (u, v) = (witness[x], witness[y]);
                self.psi
                    .host()
                    .edges()
                    .binary_search(&(u.min(v), u.max(v)))
                    .map(|i| i + 1)
                    .map_err(|_| GadgetError::Decode(format!("host edge ({u}, {v}) missing")))
            })
            .collect()
    }

    /// Decodes a selection of 1-based colors into one host vertex per
    /// pattern vertex. Fails unless the selection takes exactly one gadget
    /// per pattern edge and the chosen host edges agree on shared pattern
    /// vertices.
    pub fn decode_selection(&self, colors: &[usize]) -> Result<Vec<usize>, GadgetError> {
        let a = self.params.a;
        let mut per_alpha: Vec<Option<GadgetLabel>> = vec![None; a];
        for &c in colors {
            let label = *self
                .labels
                .get(c.wrapping_sub(1))
                .ok_or_else(|| GadgetError::Decode(format!("color {c} out of range")))?;
            if per_alpha[label.alpha - 1].replace(label).is_some() {
                return Err(GadgetError::Decode(format!("pattern edge {} chosen twice", label.alpha)));
            }
        }
        let mut chosen: Vec<Option<usize>> = vec![None; self.params.h];
        for (alpha, slot) in per_alpha.iter().enumerate() {
            let label = slot.ok_or_else(|| GadgetError::Decode(format!("pattern edge {} not chosen", alpha + 1)))?;
            let (x, y) = self.params.edge_order[alpha];
            for (p, v) in [(x, label.vx), (y, label.vy)] {
                match chosen[p] {
                    Some(w) if w != v => {
                        return Err(GadgetError::Decode(format!("pattern vertex {p} mapped to {w} and {v}")))
                    }
                    _ => chosen[p] = Some(v),
                }
            }
        }
        let witness: Vec<usize> = chosen
            .into_iter()
            .enumerate()
            .map(|(p, v)| v.ok_or_else(|| GadgetError::Decode(format!("pattern vertex {p} uncovered"))))
            .collect::<Result<_, _>>()?;
        if !self.psi.is_witness(&witness) {
            return Err(GadgetError::Decode("decoded vertices do not form an H-subgraph".into()));
        }
        Ok(witness)
    }
}

/// Result of [`connectivize_pattern`].
#[derive(Debug, Clone)]
pub struct Connectivized {
    pub psi: PsiInstance,
    /// Whether a universal pattern vertex was added.
    pub added: bool,
}

/// Makes the pattern connected with at least one edge.
///
/// Connected patterns with an edge are returned unchanged. Otherwise a
/// universal pattern vertex `x_H` (index `h`) is added together with a
/// universal host vertex `x_K`, adjacent to every existing host vertex. The
/// block `V_{x_H}` holds `x_K` plus `n - 1` fresh isolated vertices so that
/// all blocks keep size `n`.
pub fn connectivize_pattern(inst: &PsiInstance) -> Connectivized {
    connectivize_pattern_with(inst, |_| true)
}

/// As [`connectivize_pattern`], but `x_K` is joined only to host vertices
/// accepted by `joins_universal`. Vertices it rejects can then never appear
/// in a witness.
pub fn connectivize_pattern_with(inst: &PsiInstance, joins_universal: impl Fn(usize) -> bool) -> Connectivized {
    let pattern = inst.pattern();
    if pattern.is_connected() && pattern.edge_count() > 0 {
        return Connectivized { psi: inst.clone(), added: false };
    }
    let h = pattern.vertex_count();
    let n = inst.block_size();
    let old = inst.host().vertex_count();
    let universal = old;
    let new_pattern = Graph::new(h + 1, pattern.edges().iter().copied().chain((0..h).map(|x| (x, h))))
        .expect("valid pattern");
    let host_edges = inst
        .host()
        .edges()
        .iter()
        .copied()
        .chain((0..old).filter(|&v| joins_universal(v)).map(|v| (v, universal)));
    let new_host = Graph::new(old + n, host_edges).expect("valid host");
    let mut blocks = inst.blocks().to_vec();
    blocks.push((universal..old + n).collect());
    let psi = PsiInstance::new(new_pattern, new_host, blocks).expect("connectivized instance is valid");
    Connectivized { psi, added: true }
}

pub fn write_gadget_map(labels: &[GadgetLabel]) -> String {
    let mut out = String::new();
    for (i, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "color {} = ({}, {}, {})", i + 1, l.alpha, l.vx, l.vy);
    }
    out
}

/// Parses `color <i> = (<alpha>, <v_x>, <v_y>)` lines; colors must be
/// listed as `1, 2, ..` in order. `#` starts a comment.
pub fn parse_gadget_map(text: &str) -> Result<Vec<GadgetLabel>, GadgetError> {
    let mut labels = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |message: &str| GadgetError::MapSyntax { line, message: message.to_string() };
        let rest = body.strip_prefix("color").ok_or_else(|| err("expected `color`"))?;
        let (index, tuple) = rest.split_once('=').ok_or_else(|| err("expected `=`"))?;
        let index: usize = index.trim().parse().map_err(|_| err("bad color index"))?;
        if index != labels.len() + 1 {
            return Err(err("colors must be consecutive from 1"));
        }
        let inner = tuple
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| err("expected a parenthesized triple"))?;
        let parts: Vec<usize> = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("bad number in triple"))?;
        if parts.len() != 3 || parts[0] == 0 {
            return Err(err("expected (alpha >= 1, v_x, v_y)"));
        }
        labels.push(GadgetLabel { alpha: parts[0], vx: parts[1], vy: parts[2] });
    }
    Ok(labels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{solve_dual_bruteforce, solve_psi_bruteforce};

    fn psi(h: usize, pattern: &[(usize, usize)], n: usize, host: &[(usize, usize)]) -> PsiInstance {
        let blocks = (0..h).map(|x| (x * n..(x + 1) * n).collect()).collect();
        PsiInstance::new(
            Graph::new(h, pattern.iter().copied()).unwrap(),
            Graph::new(h * n, host.iter().copied()).unwrap(),
            blocks,
        )
        .unwrap()
    }

    #[test]
    fn single_edge_size() {
        let inst = psi(2, &[(0, 1)], 2, &[(0, 3), (1, 2)]);
        let red = reduce_psi_to_dcmc(&inst, &Caps::default()).unwrap();
        assert_eq!(red.params.rho, 3);
        assert_eq!(red.params.b, 2);
        assert_eq!(red.dual.vertex_count(), 19);
        assert_eq!(red.dual.graph_count(), 2);
        assert_eq!(red.dual.select(), 1);
        assert!(solve_dual_bruteforce(&red.dual, &Caps::default()).unwrap().is_yes());
    }

    #[test]
    fn rejects_disconnected_and_edgeless() {
        let inst = psi(3, &[(0, 1)], 1, &[(0, 1)]);
        assert_eq!(reduce_psi_to_dcmc(&inst, &Caps::default()).unwrap_err(), GadgetError::PatternDisconnected);
        let inst = psi(1, &[], 2, &[]);
        assert_eq!(reduce_psi_to_dcmc(&inst, &Caps::default()).unwrap_err(), GadgetError::EmptyPattern);
    }

    #[test]
    fn connectivize_identity_and_star() {
        let connected = psi(2, &[(0, 1)], 2, &[(0, 2)]);
        let out = connectivize_pattern(&connected);
        assert!(!out.added);
        assert_eq!(out.psi, connected);

        let isolated = psi(2, &[], 2, &[]);
        let out = connectivize_pattern(&isolated);
        assert!(out.added);
        assert_eq!(out.psi.pattern().edges(), &[(0, 2), (1, 2)]);
        assert!(out.psi.pattern().is_connected());
        assert_eq!(out.psi.block(2), &[4, 5]);
        assert_eq!(out.psi.block_size(), 2);
        assert!(solve_psi_bruteforce(&out.psi, &Caps::default()).unwrap().is_yes());
    }

    #[test]
    fn decode_round_trip() {
        let inst = psi(3, &[(0, 1), (1, 2)], 2, &[(0, 2), (1, 3), (3, 4), (2, 5)]);
        let red = reduce_psi_to_dcmc(&inst, &Caps::default()).unwrap();
        let witness = vec![1, 3, 4];
        assert!(inst.is_witness(&witness));
        let sel = red.selection_for(&witness).unwrap();
        assert_eq!(red.decode_selection(&sel).unwrap(), witness);
        let sel0: Vec<usize> = red.selection_for(&[0, 2, 5]).unwrap();
        assert!(red.decode_selection(&[sel0[0], sel[1]]).is_err());
        assert!(red.decode_selection(&[sel[0]]).is_err());
    }

    #[test]
    fn gadget_map_round_trip() {
        let labels = vec![GadgetLabel { alpha: 1, vx: 0, vy: 3 }, GadgetLabel { alpha: 2, vx: 3, vy: 4 }];
        let text = write_gadget_map(&labels);
        assert_eq!(text, "color 1 = (1, 0, 3)\ncolor 2 = (2, 3, 4)\n");
        assert_eq!(parse_gadget_map(&text).unwrap(), labels);
        assert!(parse_gadget_map("color 2 = (1, 0, 3)\n").is_err());
        assert!(parse_gadget_map("color 1 = (0, 0, 3)\n").is_err());
        assert!(parse_gadget_map("color 1 = 1, 0, 3\n").is_err());
    }
}
