import hypothesis
import hypothesis.strategies as st

from segmax import ShapeKind, bin_, cons, fork, inode, leaf, nil, nilt, tip

hypothesis.settings.register_profile(
    "segmax",
    deadline=None,
    derandomize=True,
    suppress_health_check=[hypothesis.HealthCheck.too_slow],
)
hypothesis.settings.load_profile("segmax")


small_labels = st.integers(min_value=-8, max_value=8)
wide_labels = st.integers(min_value=-(1 << 20), max_value=1 << 20)


def terms(shape: ShapeKind, label_st=small_labels, max_leaves: int = 16):
    if shape is ShapeKind.LIST:
        return st.recursive(
            st.just(nil()), lambda ch: st.builds(cons, label_st, ch),
            max_leaves=max_leaves,
        )
    if shape is ShapeKind.ETREE:
        return st.recursive(
            st.builds(tip, label_st), lambda ch: st.builds(bin_, ch, ch),
            max_leaves=max_leaves,
        )
    if shape is ShapeKind.ITREE:
        return st.recursive(
            st.just(nilt()), lambda ch: st.builds(inode, label_st, ch, ch),
            max_leaves=max_leaves,
        )
    return st.recursive(
        st.builds(leaf, label_st), lambda ch: st.builds(fork, label_st, ch, ch),
        max_leaves=max_leaves,
    )


any_term = st.sampled_from(list(ShapeKind)).flatmap(terms)
int_lists = st.lists(st.integers(min_value=-64, max_value=64), max_size=16)
