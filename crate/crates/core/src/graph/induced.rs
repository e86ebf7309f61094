use super::Graph;

/// True iff some vertex subset of `host` induces a graph isomorphic to
/// `pattern`. Backtracking over injective maps, pruned by degree.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.order();
    if k > host.order() || pattern.size() > host.size() {
        return false;
    }
    if k == 0 {
        return true;
    }
    // Map pattern vertices in an order where each (after the first) touches an
    // earlier one if possible, so adjacency checks bite early.
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = 0u64;
    while order.len() < k {
        let next = (0..k)
            .filter(|&v| placed & 1 << v == 0)
            .max_by_key(|&v| {
                (
                    (pattern.neighbor_mask(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .unwrap();
        order.push(next);
        placed |= 1 << next;
    }
    let mut image = vec![usize::MAX; k];
    extend(host, pattern, &order, 0, &mut image, 0)
}

fn extend(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let need = pattern.degree(p);
    for h in 0..host.order() {
        if used & 1 << h != 0 || host.degree(h) < need {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, image[q]));
        if consistent {
            image[p] = h;
            if extend(host, pattern, order, depth + 1, image, used | 1 << h) {
                return true;
            }
        }
    }
    image[p] = usize::MAX;
    false
}
