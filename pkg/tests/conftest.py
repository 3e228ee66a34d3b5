import pytest

from fusionsys import catalog
from fusionsys.groups import Subgroup, direct_product, sylow
from fusionsys.fusion import fusion_of_group


@pytest.fixture(scope="session")
def paired_triple():
    """The order-108 twisted ambient, the full order-216 product, and the axis lines.

    Both Sylow subgroups are the same set of permutations discovered in
    the same order, so subgroups can be shared between the two systems;
    the fixture asserts that identification once.
    """
    F = catalog.built("sigma3-cubed-paired").fusion
    Fbar = catalog.built("sigma3-cubed-full").fusion
    assert F.base.perms == Fbar.base.perms
    lines = []
    for sub in F.lattice.subs:
        if sub.order == 3:
            moved = set()
            for m in sub.members:
                perm = F.base.perms[m]
                moved |= {i for i, v in enumerate(perm) if v != i}
            if len(moved) == 3:
                lines.append(sub)
    assert len(lines) == 3
    return F, Fbar, lines


@pytest.fixture(scope="session")
def groups():
    return {name: catalog.built(name).group for name in catalog.names()}


@pytest.fixture(scope="session")
def sigma3_squared_aligned():
    """Product of two symmetric-group-3 fusion systems over an ambient
    built with the canonical product encoding."""
    g = catalog.built("sigma3").group
    S1 = sylow(g, 3)
    dp = direct_product(g, g)
    members = [a * 6 + b for a in S1.members for b in S1.members]
    big = fusion_of_group(dp.product, 3, Subgroup(dp.product, members, _checked=True))
    F1 = fusion_of_group(g, 3, S1)
    return big, F1
