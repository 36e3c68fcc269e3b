use super::{GadgetParams, WLayout};

/// The color graph `G(α, v_x, v_y)` as a canonical edge set over `W`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    /// 0-based index of the pattern edge `e_α`.
    pub alpha: usize,
    /// The realizing host edge with `v_x` in the block of the smaller pattern vertex.
    pub host_edge: (usize, usize),
    pub edges: Vec<(usize, usize)>,
}

fn edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// `A(α, v_x, v_y)`: the selection edge `f̂_x(v_x) f̂_y(v_y)` plus `t z` for
/// every other `z ∈ Ŵ_x ∪ Ŵ_y`.
pub fn build_a_edges(alpha: usize, vx: usize, vy: usize, params: &GadgetParams, layout: &WLayout) -> Vec<(usize, usize)> {
    let (x, y) = params.edge_order[alpha];
    let hx = layout.hat(x, &params.f_maps[vx]);
    let hy = layout.hat(y, &params.f_maps[vy]);
    let mut out = vec![edge(hx, hy)];
    for z in layout.hat_points(x).into_iter().chain(layout.hat_points(y)) {
        if z != hx && z != hy {
            out.push(edge(WLayout::SENTINEL, z));
        }
    }
    out
}

/// `pad(α, v_x, v_y, z)`: for every choice of the coordinates other than
/// `α`, an edge from `t` to the point with `(0, 0)` at `α`, and for every
/// `r ∈ F_ρ` a star from `(r, 0)` to `(r + g[i], i)`, `i = 1..b`.
pub fn build_padding(
    alpha: usize,
    vx: usize,
    vy: usize,
    z: usize,
    params: &GadgetParams,
    layout: &WLayout,
) -> Vec<(usize, usize)> {
    let g = params.g_vector(vx, vy);
    let rho = params.rho as usize;
    let b = params.b;
    let stride = layout.stride(alpha);
    let radix = layout.radix();
    let high_count = radix.pow(alpha as u32);
    let offset = layout.block_offset(z);
    let digit = |r: usize, beta: usize| r * (b + 1) + beta;
    let mut out = Vec::with_capacity(high_count * stride * (1 + rho * b));
    for high in 0..high_count {
        for low in 0..stride {
            let base = offset + high * stride * radix + low;
            out.push(edge(WLayout::SENTINEL, base));
            for r in 0..rho {
                let center = base + digit(r, 0) * stride;
                for (i, &gi) in g.iter().enumerate() {
                    let leaf_r = (r + gi as usize) % rho;
                    out.push(edge(center, base + digit(leaf_r, i + 1) * stride));
                }
            }
        }
    }
    out
}

pub fn build_gadget(alpha: usize, vx: usize, vy: usize, params: &GadgetParams, layout: &WLayout) -> Gadget {
    let mut edges = build_a_edges(alpha, vx, vy, params, layout);
    for z in 0..params.h {
        edges.extend(build_padding(alpha, vx, vy, z, params, layout));
    }
    edges.sort_unstable();
    edges.dedup();
    Gadget { alpha, host_edge: (vx, vy), edges }
}
