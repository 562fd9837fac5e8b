use itertools::Itertools;

use super::{IndexTuple, NodeContext, VcItem};

/// Every representative that may appear in the cover part of an index, in
/// canonical item order.
pub(crate) fn cover_candidates(ctx: &NodeContext) -> Vec<VcItem> {
    let mut out: Vec<VcItem> = (0..ctx.in2.class_count() as u32).map(VcItem::XNonS).collect();
    out.extend(ctx.in_singletons.iter().map(|&r| VcItem::XS(r)));
    out.extend((0..ctx.out2.class_count() as u32).map(VcItem::YNonS));
    out.extend(ctx.out_singletons.iter().map(|&r| VcItem::YS(r)));
    out
}

/// Lazily enumerates `𝕀_x`: every cover of at most `4·mim` candidates,
/// combined with every `x_rest`.
pub fn enumerate_indices<'c>(ctx: &'c NodeContext) -> impl Iterator<Item = IndexTuple> + 'c {
    let candidates = cover_candidates(ctx);
    let max = ctx.budget().min(candidates.len());
    let rests = ctx.in1.class_count() as u32;
    (0..=max)
        .flat_map(move |k| candidates.clone().into_iter().combinations(k))
        .flat_map(move |items| (0..rests).map(move |r| IndexTuple::from_items(items.iter().copied(), r)))
}

/// `|𝕀_x|`, saturating at `u128::MAX`.
pub fn index_count(ctx: &NodeContext) -> u128 {
    let c = cover_candidates(ctx).len();
    let covers = (0..=ctx.budget().min(c)).fold(0u128, |acc, k| acc.saturating_add(binomial(c, k)));
    covers.saturating_mul(ctx.in1.class_count() as u128)
}

/// Upper bound on a reduced table: `|𝕀_x| · (4·mim)^(4·mim)`, saturating.
pub fn size_bound(ctx: &NodeContext) -> u128 {
    let b = ctx.budget();
    let per_index = (0..b).fold(1u128, |acc, _| acc.saturating_mul(b as u128));
    index_count(ctx).saturating_mul(per_index)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    let mut acc = 1u128;
    for j in 0..k {
        // exact at every step: acc holds C(n, j)
        match acc.checked_mul((n - j) as u128) {
            Some(v) => acc = v / (j as u128 + 1),
            None => return u128::MAX,
        }
    }
    acc
}
