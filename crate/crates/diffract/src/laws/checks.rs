//! The individual law checks. Each reads the tabulated data (so that a
//! corrupted table is visible to it) and recomputes the defining formula
//! independently where the law calls for it.

use std::collections::{HashMap, HashSet};

use crate::group::validate_group_table;
use crate::laws::{Counterexample, LawInstance, LawResult, REASON_REQUIRES_TRANSVERSAL};
use crate::perm::Permutation;

/// Largest fiber-map subgroup the representation law will enumerate before
/// falling back to a generator-based kernel check.
const FIBER_CLOSURE_CAP: usize = 65_536;

/// Left translation by each element is a permutation, the assignment is a
/// homomorphism into the symmetric group, and it is injective.
pub(super) fn cayley_embedding(i: &LawInstance) -> LawResult {
    const LAW: &str = "cayley-embedding";
    let g = i.group();
    let n = g.order();
    let mut checks = 0u64;
    let rhos: Vec<Permutation> = (0..n).map(|a| g.cayley_rho(a)).collect();
    for (a, rho) in rhos.iter().enumerate() {
        for b in 0..n {
            checks += 1;
            if rho.apply(b) != g.mul(a, b) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "translation table disagrees with the product".into(),
                        vec![a, b],
                        g,
                    ),
                );
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            checks += 1;
            if rhos[g.mul(a, b)] != rhos[a].compose(&rhos[b]) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "translations do not compose like the product".into(),
                        vec![a, b],
                        g,
                    ),
                );
            }
        }
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (a, rho) in rhos.iter().enumerate() {
        checks += 1;
        if let Some(&prev) = seen.get(rho.images()) {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "two elements translate identically".into(),
                    vec![prev, a],
                    g,
                ),
            );
        }
        seen.insert(rho.images().to_vec(), a);
    }
    LawResult::pass(LAW, checks)
}

/// Representatives absorb their own coset: bar(bar(g)) = bar(g) and
/// bar(g·h) = bar(g) for every h in H.
pub(super) fn representative_calculus(i: &LawInstance) -> LawResult {
    i.transversal().check_representative_calculus()
}

/// The position action g ↦ gamma(g) sends the identity to the identity
/// permutation and products to compositions.
pub(super) fn frobenius_homomorphism(i: &LawInstance) -> LawResult {
    const LAW: &str = "frobenius-homomorphism";
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let mut checks = 0u64;
    let gammas: Vec<Permutation> = (0..n).map(|a| f.gamma(a)).collect();
    checks += 1;
    if !gammas[0].is_identity() {
        return LawResult::fail(
            LAW,
            checks,
            Counterexample::new(
                "identity does not act as the identity permutation".into(),
                vec![0],
                g,
            ),
        );
    }
    for a in 0..n {
        for b in 0..n {
            checks += 1;
            if gammas[g.mul(a, b)] != gammas[a].compose(&gammas[b]) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "position action does not respect the product".into(),
                        vec![a, b],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// Every tabulated fiber entry equals the defining formula
/// bar(g·t)⁻¹·(g·t) and lands inside the subgroup.
pub(super) fn fibration_containment(i: &LawInstance) -> LawResult {
    const LAW: &str = "fibration-containment";
    let g = i.group();
    let h = i.subgroup();
    let t = i.transversal();
    let f = i.fibration();
    let n = g.order();
    let mut checks = 0u64;
    for g_el in 0..n {
        for t_pos in 0..f.t_size() {
            checks += 1;
            let rep = t.reps()[t_pos];
            let gt = g.mul(g_el, rep);
            let formula = g.mul(g.inv(t.bar(gt)), gt);
            let tabulated = f.delta_by_pos(g_el, t_pos);
            if tabulated != formula || !h.contains(tabulated) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "tabulated fiber entry differs from bar(gt)^-1 * (gt) in H".into(),
                        vec![g_el, rep, tabulated, formula],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// The fiber of a product factors through the action:
/// delta(g1·g2, t) = delta(g1, gamma(g2)(t)) · delta(g2, t).
pub(super) fn fibration_cocycle(i: &LawInstance) -> LawResult {
    const LAW: &str = "fibration-cocycle";
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let k = f.t_size();
    let mut checks = 0u64;
    for g1 in 0..n {
        for g2 in 0..n {
            let g12 = g.mul(g1, g2);
            for t_pos in 0..k {
                checks += 1;
                let lhs = f.delta_by_pos(g12, t_pos);
                let moved = f.gamma_apply(g2, t_pos);
                let rhs = g.mul(f.delta_by_pos(g1, moved), f.delta_by_pos(g2, t_pos));
                if lhs != rhs {
                    return LawResult::fail(
                        LAW,
                        checks,
                        Counterexample::new(
                            "fiber of a product does not split across the factors".into(),
                            vec![g1, g2, i.transversal().reps()[t_pos], lhs, rhs],
                            g,
                        ),
                    );
                }
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// Over a transversal every element factors as bar(g) · delta0(g), and the
/// two directions of the pair coding invert each other.
pub(super) fn spectral_decomposition(i: &LawInstance) -> LawResult {
    const LAW: &str = "spectral-decomposition";
    if !i.transversal().is_transversal() {
        return LawResult::skipped(LAW, REASON_REQUIRES_TRANSVERSAL);
    }
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let mut checks = 0u64;
    for g_el in 0..n {
        checks += 1;
        let s = match f.nabla(g_el) {
            Ok(s) => s,
            Err(e) => {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(format!("factoring failed: {e}"), vec![g_el], g),
                );
            }
        };
        if g.mul(s.t, s.h) != g_el {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "representative times fiber part does not rebuild the element".into(),
                    vec![g_el, s.t, s.h],
                    g,
                ),
            );
        }
    }
    for idx in 0..f.t_size() * f.h_size() {
        checks += 1;
        let s = f.spectrum_at(idx);
        let rebuilt = match f.nabla_inv(s) {
            Ok(x) => x,
            Err(e) => {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(format!("pair rejected: {e}"), vec![s.t, s.h], g),
                );
            }
        };
        match f.nabla_index(rebuilt) {
            Ok(back) if back == idx => {}
            _ => {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "pair does not survive the round trip through the group".into(),
                        vec![s.t, s.h, rebuilt],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// Each fiber map permutes the pairs while fixing the representative
/// coordinate.
pub(super) fn fiber_action(i: &LawInstance) -> LawResult {
    const LAW: &str = "fiber-action";
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let pair_count = f.t_size() * f.h_size();
    let mut checks = 0u64;
    for g_el in 0..n {
        let beta = f.dual_delta(g_el).beta();
        checks += 1;
        if beta.degree() != pair_count {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "fiber map does not permute the full pair set".into(),
                    vec![g_el],
                    g,
                ),
            );
        }
        for idx in 0..pair_count {
            checks += 1;
            let before = f.spectrum_at(idx);
            let after = f.spectrum_at(beta.apply(idx));
            if after.t != before.t {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "fiber map moved the representative coordinate".into(),
                        vec![g_el, before.t, after.t],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// The fiber maps form a group under pointwise product, beta turns that
/// product into composition of pair permutations, and only the constant
/// identity map acts trivially.
pub(super) fn fiber_representation(i: &LawInstance) -> LawResult {
    const LAW: &str = "fiber-representation";
    let g = i.group();
    let h = i.subgroup();
    let f = i.fibration();
    let n = g.order();
    let k = f.t_size();
    let m = h.order();
    let mut checks = 0u64;

    // Dual maps as H-position vectors, with their pair permutations.
    let dual_values: Vec<Vec<usize>> = (0..n)
        .map(|g_el| {
            (0..k)
                .map(|t_pos| {
                    h.position(f.delta_by_pos(g_el, t_pos))
                        .expect("tabulated fiber entries lie in H")
                })
                .collect()
        })
        .collect();
    let beta_of = |values: &[usize]| -> Permutation {
        let mut images = vec![0usize; k * m];
        for (t_pos, &value) in values.iter().enumerate() {
            for h_pos in 0..m {
                let src = f.pair_index(t_pos, h_pos);
                let moved = h
                    .position(g.mul(h.member_at(value), h.member_at(h_pos)))
                    .expect("H is closed");
                images[src] = f.pair_index(t_pos, moved);
            }
        }
        Permutation::from_images(images).expect("left translation in each fiber is bijective")
    };
    let betas: Vec<Permutation> = dual_values.iter().map(|v| beta_of(v)).collect();

    // Subgroup product on H-positions, tabulated once.
    let mut h_mul = vec![0usize; m * m];
    for a in 0..m {
        for b in 0..m {
            h_mul[a * m + b] = h
                .position(g.mul(h.member_at(a), h.member_at(b)))
                .expect("H is closed");
        }
    }
    let pointwise = |x: &[usize], y: &[usize]| -> Vec<usize> {
        x.iter().zip(y).map(|(&a, &b)| h_mul[a * m + b]).collect()
    };

    // beta is a homomorphism on every pair of dual maps.
    for a in 0..n {
        for b in 0..n {
            checks += 1;
            let prod = pointwise(&dual_values[a], &dual_values[b]);
            if beta_of(&prod) != betas[a].compose(&betas[b]) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "pair permutations do not compose like the pointwise product".into(),
                        vec![a, b],
                        g,
                    ),
                );
            }
        }
    }

    // Is the raw image already closed under the pointwise product?
    let image: HashSet<Vec<usize>> = dual_values.iter().cloned().collect();
    let distinct = image.len();
    let mut raw_closed = true;
    'closure: for a in &image {
        for b in &image {
            checks += 1;
            if !image.contains(&pointwise(a, b)) {
                raw_closed = false;
                break 'closure;
            }
        }
    }

    // Enumerate the generated subgroup, capped; past the cap fall back to
    // checking the kernel condition on generators and pairwise products.
    let mut generated: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let identity_map = vec![h.position(0).expect("identity lies in H"); k];
    for v in std::iter::once(&identity_map).chain(dual_values.iter()) {
        if seen.insert(v.clone()) {
            generated.push(v.clone());
        }
    }
    let mut frontier = 0usize;
    let mut capped = false;
    while frontier < generated.len() {
        let current = generated[frontier].clone();
        frontier += 1;
        for gen in &dual_values {
            let next = pointwise(&current, gen);
            if seen.insert(next.clone()) {
                generated.push(next.clone());
                if generated.len() > FIBER_CLOSURE_CAP {
                    capped = true;
                    break;
                }
            }
        }
        if capped {
            break;
        }
    }

    // Kernel: a fiber map acts trivially exactly when it is constantly the
    // identity of H.
    let kernel_domain: Vec<&Vec<usize>> = if capped {
        let mut dom: Vec<&Vec<usize>> = Vec::new();
        dom.push(&identity_map);
        dom.extend(dual_values.iter());
        dom
    } else {
        generated.iter().collect()
    };
    let mut pairwise_store: Vec<Vec<usize>> = Vec::new();
    if capped {
        for a in &dual_values {
            for b in &dual_values {
                pairwise_store.push(pointwise(a, b));
            }
        }
    }
    let e_pos = h.position(0).expect("identity lies in H");
    for values in kernel_domain.into_iter().chain(pairwise_store.iter()) {
        checks += 1;
        let trivial_action = beta_of(values).is_identity();
        let constant_identity = values.iter().all(|&p| p == e_pos);
        if trivial_action != constant_identity {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "a nontrivial fiber map acts trivially on the pairs".into(),
                    values.iter().map(|&p| h.member_at(p)).collect(),
                    g,
                ),
            );
        }
    }

    let mut note = format!(
        "dual map distinct images {distinct}/{n}; raw image closed under pointwise product: {raw_closed}"
    );
    if capped {
        note.push_str(&format!(
            "; generated fiber group exceeds {FIBER_CLOSURE_CAP}, kernel checked on generators and pairwise products"
        ));
    } else {
        note.push_str(&format!("; generated fiber group order {}", generated.len()));
    }
    LawResult::pass(LAW, checks).with_note(note)
}

/// The pair action g ↦ alpha(g) is an injective homomorphism into the
/// permutations of the pair set.
pub(super) fn diffraction_faithful(i: &LawInstance) -> LawResult {
    const LAW: &str = "diffraction-faithful";
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let mut checks = 0u64;
    let alphas: Vec<Permutation> = (0..n).map(|a| f.alpha(a)).collect();
    checks += 1;
    if !alphas[0].is_identity() {
        return LawResult::fail(
            LAW,
            checks,
            Counterexample::new(
                "identity does not act trivially on the pairs".into(),
                vec![0],
                g,
            ),
        );
    }
    for a in 0..n {
        for b in 0..n {
            checks += 1;
            if alphas[g.mul(a, b)] != alphas[a].compose(&alphas[b]) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "pair action does not respect the product".into(),
                        vec![a, b],
                        g,
                    ),
                );
            }
        }
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::new();
    for (a, alpha) in alphas.iter().enumerate() {
        checks += 1;
        if let Some(&prev) = seen.get(alpha.images()) {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "two elements act identically on the pairs".into(),
                    vec![prev, a],
                    g,
                ),
            );
        }
        seen.insert(alpha.images().to_vec(), a);
    }
    let result = LawResult::pass(LAW, checks);
    if i.transversal().is_transversal() {
        result
    } else {
        result.with_note(
            "non-transversal representative system; faithfulness verified exhaustively".into(),
        )
    }
}

/// Factoring commutes with the action: the pair of g·x is alpha(g) applied
/// to the pair of x.
pub(super) fn action_equivariance(i: &LawInstance) -> LawResult {
    const LAW: &str = "action-equivariance";
    if !i.transversal().is_transversal() {
        return LawResult::skipped(LAW, REASON_REQUIRES_TRANSVERSAL);
    }
    let g = i.group();
    let f = i.fibration();
    let n = g.order();
    let mut checks = 0u64;
    let nabla_idx: Vec<usize> = match (0..n)
        .map(|x| f.nabla_index(x))
        .collect::<crate::error::Result<Vec<usize>>>()
    {
        Ok(v) => v,
        Err(e) => {
            return LawResult::fail(
                LAW,
                0,
                Counterexample::new(format!("factoring failed: {e}"), vec![], g),
            );
        }
    };
    for g_el in 0..n {
        let alpha = f.alpha(g_el);
        for x in 0..n {
            checks += 1;
            if nabla_idx[g.mul(g_el, x)] != alpha.apply(nabla_idx[x]) {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "acting before and after factoring disagree".into(),
                        vec![g_el, x],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// The tabulated pair product is a genuine group law whose first
/// coordinate tracks coset representatives, whose identity is the pair of
/// identities, and whose inverses mirror the parent group's.
pub(super) fn bequeath_group(i: &LawInstance) -> LawResult {
    const LAW: &str = "bequeath-group";
    let g = i.group();
    let t = i.transversal();
    let f = i.fibration();
    let d = match i.diffracted() {
        None => return LawResult::skipped(LAW, REASON_REQUIRES_TRANSVERSAL),
        Some(Err(e)) => {
            return LawResult::fail(
                LAW,
                0,
                Counterexample::new(format!("pair group construction failed: {e}"), vec![], g),
            );
        }
        Some(Ok(d)) => d,
    };
    let mut checks = 0u64;
    let order = d.order();
    match validate_group_table(order, d.as_group().raw_table()) {
        Ok((_, vchecks)) => checks += vchecks,
        Err(defect) => {
            let mut elements = Vec::new();
            for &w in &defect.witness {
                let s = f.spectrum_at(w);
                elements.push(s.t);
                elements.push(s.h);
            }
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    format!("pair table is not a group: {} {}", defect.defect, defect.detail),
                    elements,
                    g,
                ),
            );
        }
    }
    checks += 1;
    let id_pair = d.pairs()[d.identity()];
    if id_pair.t != 0 || id_pair.h != 0 {
        return LawResult::fail(
            LAW,
            checks,
            Counterexample::new(
                "identity of the pair group is not the pair of identities".into(),
                vec![id_pair.t, id_pair.h],
                g,
            ),
        );
    }
    for g_el in 0..g.order() {
        checks += 1;
        let idx = match f.nabla_index(g_el) {
            Ok(idx) => idx,
            Err(e) => {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(format!("factoring failed: {e}"), vec![g_el], g),
                );
            }
        };
        let inv_idx = match f.nabla_index(g.inv(g_el)) {
            Ok(idx) => idx,
            Err(e) => {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(format!("factoring failed: {e}"), vec![g.inv(g_el)], g),
                );
            }
        };
        if d.inverse(idx) != inv_idx {
            return LawResult::fail(
                LAW,
                checks,
                Counterexample::new(
                    "pair inverse does not match the parent group inverse".into(),
                    vec![g_el, g.inv(g_el)],
                    g,
                ),
            );
        }
    }
    // First coordinate of a product is the representative of the product.
    for t1_pos in 0..f.t_size() {
        let t1 = t.reps()[t1_pos];
        for h_pos in 0..f.h_size() {
            let h_el = i.subgroup().member_at(h_pos);
            for t2_pos in 0..f.t_size() {
                checks += 1;
                let t2 = t.reps()[t2_pos];
                let left = f.pair_index(t1_pos, h_pos);
                let right = f.pair_index(t2_pos, 0);
                let prod_pair = d.pairs()[d.mul(left, right)];
                let expected_rep = t.bar(g.mul(g.mul(t1, h_el), t2));
                if prod_pair.t != expected_rep {
                    return LawResult::fail(
                        LAW,
                        checks,
                        Counterexample::new(
                            "first coordinate of a product is not the coset representative".into(),
                            vec![t1, h_el, t2, prod_pair.t, expected_rep],
                            g,
                        ),
                    );
                }
            }
        }
    }
    LawResult::pass(LAW, checks)
}

/// The factoring map carries the parent group isomorphically onto the pair
/// group.
pub(super) fn diffraction_isomorphism(i: &LawInstance) -> LawResult {
    const LAW: &str = "diffraction-isomorphism";
    match i.diffracted() {
        None => LawResult::skipped(LAW, REASON_REQUIRES_TRANSVERSAL),
        Some(Err(e)) => LawResult::fail(
            LAW,
            0,
            Counterexample::new(
                format!("pair group construction failed: {e}"),
                vec![],
                i.group(),
            ),
        ),
        Some(Ok(d)) => d.iso_check(),
    }
}

/// Every product g1·g2 reassembles from its rewrite trace:
/// result = representative · fiber · tail.
pub(super) fn internal_rewriting(i: &LawInstance) -> LawResult {
    const LAW: &str = "internal-rewriting";
    if !i.transversal().is_transversal() {
        return LawResult::skipped(LAW, REASON_REQUIRES_TRANSVERSAL);
    }
    let g = i.group();
    let f = i.fibration();
    let h = i.subgroup();
    let n = g.order();
    let mut checks = 0u64;
    for g1 in 0..n {
        for g2 in 0..n {
            checks += 1;
            let trace = match crate::diffracted::rewrite_product(f, g1, g2) {
                Ok(tr) => tr,
                Err(e) => {
                    return LawResult::fail(
                        LAW,
                        checks,
                        Counterexample::new(format!("rewrite failed: {e}"), vec![g1, g2], g),
                    );
                }
            };
            let reassembled = g.mul(g.mul(trace.rep_part, trace.fib_part), trace.h_tail);
            let direct = g.mul(g1, g2);
            if trace.result != direct
                || reassembled != direct
                || !h.contains(trace.fib_part)
                || !h.contains(trace.h_tail)
            {
                return LawResult::fail(
                    LAW,
                    checks,
                    Counterexample::new(
                        "rewrite trace does not reassemble the product".into(),
                        vec![g1, g2, trace.rep_part, trace.fib_part, trace.h_tail],
                        g,
                    ),
                );
            }
        }
    }
    LawResult::pass(LAW, checks)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::coset::{CosetDecomposition, Subgroup};
    use crate::group::FiniteGroup;
    use crate::laws::LawInstance;
    use crate::transversal::{Transversal, TransversalStrategy};

    fn q8_center_instance() -> LawInstance {
        let g = Arc::new(FiniteGroup::builtin("quaternion").unwrap());
        let h = Arc::new(Subgroup::generate(g, &[1]).unwrap()); // {1, -1}
        let d = Arc::new(CosetDecomposition::left_cosets(h));
        let t = Arc::new(Transversal::choose(d, &TransversalStrategy::MinIndex, false).unwrap());
        LawInstance::assemble(t).unwrap()
    }

    #[test]
    fn quaternion_center_passes_every_check() {
        let i = q8_center_instance();
        for id in crate::laws::LAW_IDS {
            let r = crate::laws::dispatch(id, &i);
            assert!(r.is_pass(), "{id} failed: {r:?}");
        }
    }

    #[test]
    fn check_counts_match_their_closed_forms() {
        let i = q8_center_instance();
        let n = 8u64;
        let k = 4u64;
        let m = 2u64;
        assert_eq!(cayley_embedding(&i).checks_run, 2 * n * n + n);
        assert_eq!(frobenius_homomorphism(&i).checks_run, n * n + 1);
        assert_eq!(fibration_containment(&i).checks_run, n * k);
        assert_eq!(fibration_cocycle(&i).checks_run, n * n * k);
        assert_eq!(spectral_decomposition(&i).checks_run, n + k * m);
        assert_eq!(fiber_action(&i).checks_run, n * k * m + n);
        assert_eq!(diffraction_faithful(&i).checks_run, n * n + n + 1);
        assert_eq!(action_equivariance(&i).checks_run, n * n);
        assert_eq!(internal_rewriting(&i).checks_run, n * n);
    }

    #[test]
    fn fiber_representation_notes_injectivity() {
        // Trivial subgroup: all dual maps constant, so only one distinct image.
        let g = Arc::new(FiniteGroup::builtin("cyclic:4").unwrap());
        let h = Arc::new(Subgroup::trivial(g));
        let d = Arc::new(CosetDecomposition::left_cosets(h));
        let t = Arc::new(Transversal::choose(d, &TransversalStrategy::MinIndex, false).unwrap());
        let i = LawInstance::assemble(t).unwrap();
        let r = fiber_representation(&i);
        assert!(r.is_pass());
        let note = r.note.unwrap();
        assert!(note.contains("distinct images 1/4"), "{note}");
        assert!(note.contains("generated fiber group order 1"), "{note}");
    }

    #[test]
    fn mutated_gamma_trips_the_homomorphism_or_cocycle() {
        // Corrupt one delta entry; containment must fail and point at it.
        let i = q8_center_instance();
        let good = i.fibration().delta_by_pos(3, 2);
        let h = i.subgroup();
        let good_pos = h.position(good).unwrap();
        let bad_pos = (good_pos + 1) % h.order();
        let mutated = Arc::new(i.fibration().with_mutated_entry(3, 2, bad_pos));
        let bad = LawInstance::from_fibration(mutated);
        let r = fibration_containment(&bad);
        assert!(r.is_fail());
        let ce = r.counterexample.unwrap();
        assert_eq!(ce.elements[0], 3);
    }
}
