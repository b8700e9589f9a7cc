import random

import pytest
from hypothesis import given, settings, strategies as st

from lensgoeritz.fpgroups import (TRIVIAL, Amalgam, AmalgamSpec, GroupHom, GroupWord,
                                  GroupWordParseError, Index, Overflow, Presentation,
                                  PresentationParseError, RejectedEmbedding, TietzeLog,
                                  UnsupportedFactor, abelianization_invariants,
                                  amalgamated_product, backend_for, canonical_form, cyclic,
                                  direct_sum, free_product, hom_count, parse_group_word,
                                  parse_presentation, smith_diagonal, syntactically_equal,
                                  tietze_simplify, todd_coxeter)
from lensgoeritz.fpgroups.coset import default_coset_cap
from lensgoeritz.fpgroups.smith import AbelianInvariants, relation_matrix
from lensgoeritz.goeritz import stabilizer_data
from oracles import (brute_hom_count, count_homs_to_cyclic, determinantal_invariants,
                     predicted_cyclic_homs)

G = parse_group_word
P = Presentation.build

D8 = P("rho gamma", "rho^4", "gamma^2", "(rho gamma)^2")
D6 = P("delta gamma'", "delta^3", "gamma'^2", "(gamma' delta)^2")


# -- words and text formats

def test_group_word_parse():
    assert G("(r g)^2") == G("r g r g")
    assert G("a^-1 b a") == GroupWord.of(("a", -1), "b", "a")
    assert G("a b = b a") == G("a b a^-1 b^-1")
    assert G("1") == GroupWord()
    assert str(G("a a a b^-1")) == "a^3 b^-1"
    assert G("a*b") == G("a b")
    for bad in ("a^", "(a b", "a ^ x", "3a", "a)"):
        with pytest.raises(GroupWordParseError):
            G(bad)


def test_group_word_ops():
    w = G("a b^2 c")
    assert (w * w.inverse()) == GroupWord()
    assert w.exponent_sum("b") == 2
    assert w.substitute({"b": G("a")}) == G("a^3 c")
    assert G("b a b^-1").cyclically_reduced() == G("a")
    assert G("a b") ** -2 == G("b^-1 a^-1 b^-1 a^-1")


def test_presentation_text_round_trip():
    text = "# dihedral\ngens: rho gamma\nrel: rho^4\nrel: gamma^2\nrel: (rho gamma)^2\n"
    p = parse_presentation(text)
    assert p == D8
    assert parse_presentation(p.to_text()) == p
    assert Presentation.from_dict(p.to_dict()) == p
    for bad in ("rel: a^2\n", "gens: a\nrel: b\n", "gens: a\ngens: b\n", "gens: a\nrels a\n",
                "gens: a\nrel: a^\n"):
        with pytest.raises(PresentationParseError):
            parse_presentation(bad)


def test_presentation_rejects_duplicates_and_unknowns():
    with pytest.raises(ValueError):
        Presentation(("a", "a"))
    with pytest.raises(ValueError):
        P("a", "b^2")


# -- products

def test_direct_sum_examples():
    s = direct_sum(cyclic("a", 2), cyclic("b", 2))
    assert s == P("a b", "a^2", "b^2", "a b a^-1 b^-1")
    assert direct_sum(D8, TRIVIAL) == D8
    black = direct_sum(cyclic("alpha", 2), P("beta gamma", "gamma^2"))
    assert black == stabilizer_data(3).black


def test_free_product_examples():
    assert free_product(cyclic("a", 2), cyclic("b", 2)) == P("a b", "a^2", "b^2")
    assert free_product(cyclic("beta"), cyclic("gamma", 2)) == P("beta gamma", "gamma^2")
    assert free_product(TRIVIAL, D8) == D8


def test_products_rename_collisions_and_keep_relators():
    s = free_product(cyclic("a", 2), cyclic("a", 3))
    assert s.generators == ("a", "a_2")
    assert len(s.relators) == 2
    d = direct_sum(D8, D8)
    assert len(set(d.generators)) == 4
    assert len(d.relators) == 6 + 4


# -- abelianization

def test_smith_small():
    assert abelianization_invariants(cyclic("a", 2)) == AbelianInvariants(0, (2,))
    assert abelianization_invariants(cyclic("a")) == AbelianInvariants(1, ())
    assert smith_diagonal([[2, 4], [6, 8]]) == [2, 4]
    with pytest.raises(ValueError):
        AbelianInvariants(0, (4, 2))


@pytest.mark.parametrize("pres,rank,tors", [
    (direct_sum(cyclic("alpha", 2), P("beta delta gamma", "delta^3", "gamma^2",
                                      "(gamma delta)^2")), 1, [2, 2]),
    (direct_sum(cyclic("alpha", 2), P("beta gamma sigma", "gamma^2", "sigma^2")), 1, [2, 2, 2]),
    (D8, 0, [2, 2]),
])
def test_abelianization_against_minors(pres, rank, tors):
    m = relation_matrix(pres)
    assert determinantal_invariants(m, pres.rank) == (rank, tors)
    inv = abelianization_invariants(pres)
    assert (inv.free_rank, list(inv.torsion)) == (rank, tors)


def _random_abelian_presentation(rng):
    k = rng.randint(1, 3)
    names = ["a", "b", "c"][:k]
    rels = []
    for _ in range(rng.randint(0, 3)):
        word = GroupWord.from_letters((g, rng.randint(-4, 4)) for g in names)
        rels.append(word)
    return Presentation(tuple(names), tuple(rels))


def test_abelianization_randomized_against_brute_force():
    rng = random.Random(7)
    for _ in range(150):
        pres = _random_abelian_presentation(rng)
        m = relation_matrix(pres)
        inv = abelianization_invariants(pres)
        assert (inv.free_rank, list(inv.torsion)) == determinantal_invariants(m, pres.rank)
        for n in range(2, 7):
            assert count_homs_to_cyclic(m, pres.rank, n) == \
                predicted_cyclic_homs(inv.free_rank, list(inv.torsion), n)


# -- coset enumeration

@pytest.mark.parametrize("pres,order", [
    (D8, 8), (D6, 6),
    (direct_sum(cyclic("alpha", 2), D6), 12),
    (direct_sum(cyclic("alpha", 2), cyclic("gamma", 2)), 4),
    (cyclic("a", 7), 7), (TRIVIAL, 1), (P("a b", "a", "b^5"), 5),
    (P("a b", "a^2", "b^3", "(a b)^3"), 12), (P("a b", "a^2", "b^3", "(a b)^4"), 24),
    (P("a b", "a^4", "a^2 b^-2", "b^-1 a b a"), 8),
    (P("a b", "a^3", "b^2", "a b a b"), 6),
    (P("a b", "a^2", "b^2", "(a b)^6"), 12),
])
def test_todd_coxeter_orders(pres, order):
    res = todd_coxeter(pres, coset_cap=200)
    assert isinstance(res, Index) and res.n == order


def test_todd_coxeter_subgroup_and_overflow():
    res = todd_coxeter(D8, [G("rho^2"), G("gamma")], coset_cap=200)
    assert res.n == 2
    assert isinstance(todd_coxeter(P("a b", "a^2"), coset_cap=50), Overflow)
    assert isinstance(todd_coxeter(cyclic("a"), coset_cap=10), Overflow)


def test_coset_table_action():
    res = todd_coxeter(D8, coset_cap=100)
    assert all(res.act(c, r) == c for c in range(res.n) for r in D8.relators)


def test_coset_cap_env(monkeypatch):
    monkeypatch.setenv("GOERITZ_COSET_CAP", "123")
    assert default_coset_cap() == 123
    monkeypatch.delenv("GOERITZ_COSET_CAP")
    assert default_coset_cap() == 10000


# -- homomorphism counts

@pytest.mark.parametrize("pres,n,count", [
    (cyclic("a", 2), 2, 2), (cyclic("a", 2), 3, 4), (D8, 2, 4),
])
def test_hom_count_examples(pres, n, count):
    assert hom_count(pres, n) == count


@pytest.mark.parametrize("pres", [D8, D6, P("a b", "a^2", "b^3", "(a b)^3"),
                                  P("a b", "a b a^-1 b^-1"), P("x y z", "x^2", "x y z")])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_hom_count_brute_force(pres, n):
    rels = [list(r.syllables) for r in pres.relators]
    assert hom_count(pres, n) == brute_hom_count(pres.generators, rels, n)


def test_hom_count_bounds():
    with pytest.raises(ValueError):
        hom_count(D8, 6)


# -- Tietze moves

def test_tietze_elimination_example():
    out = tietze_simplify(P("a b", "a^2", "b a^-1"))
    assert syntactically_equal(out, cyclic("a", 2))


def test_tietze_reduces_generator_count():
    p = P("alpha beta beta2 gamma", "alpha^2", "gamma^2", "beta beta2 = alpha",
          "alpha gamma = gamma alpha")
    log = TietzeLog()
    q = tietze_simplify(p, log=log)
    assert q.rank == p.rank - 1
    assert any(m.startswith("eliminate beta2") for m in log.moves)
    assert abelianization_invariants(q) == abelianization_invariants(p)


def test_canonical_form_ignores_rotation_and_inversion():
    a = P("r g", "r g r g", "g^2")
    b = P("r g", "g^-2", "g r g r")
    assert canonical_form(a) == canonical_form(b)
    assert syntactically_equal(a, b)


def _random_presentation(rng):
    names = ["a", "b", "c"][:rng.randint(2, 3)]
    rels = [GroupWord.of((g, rng.randint(2, 4))) for g in names if rng.random() < 0.8]
    for _ in range(rng.randint(1, 3)):
        letters = [(rng.choice(names), rng.choice((-1, 1))) for _ in range(rng.randint(1, 6))]
        rels.append(GroupWord.from_letters(letters))
    if rng.random() < 0.5:
        g = rng.choice(names)
        rest = [h for h in names if h != g]
        w = GroupWord.from_letters((rng.choice(rest), rng.choice((-1, 1)))
                                   for _ in range(rng.randint(0, 3)))
        rels.append(GroupWord.of(g) * w.inverse())
    if rng.random() < 0.3:
        rels.append(rels[0])
    if rng.random() < 0.3:
        rels.append(GroupWord.of(names[0], (names[0], -1)).cyclically_reduced())
    rels = [r for r in rels]
    return Presentation(tuple(names), tuple(rels))


def test_tietze_invariance_randomized():
    rng = random.Random(11)
    for _ in range(100):
        p = _random_presentation(rng)
        q = tietze_simplify(p)
        assert abelianization_invariants(q) == abelianization_invariants(p), p
        for n in (2, 3):
            assert hom_count(q, n) == hom_count(p, n), p
        assert q.rank <= p.rank


def test_hom_count_invariant_under_renaming():
    renamed = D8.rename({"rho": "r", "gamma": "g"})
    assert all(hom_count(renamed, n) == hom_count(D8, n) for n in (2, 3, 4))


# -- embeddings and amalgams

def test_rejected_embeddings():
    z2, z3 = cyclic("a", 2), cyclic("b", 3)
    with pytest.raises(RejectedEmbedding):
        amalgamated_product(AmalgamSpec(z3, z3, z2, GroupHom(z2, z3, {"a": "b"}),
                                        GroupHom(z2, z3, {"a": "b"})))
    v4 = direct_sum(cyclic("a", 2), cyclic("c", 2))
    z2b = cyclic("b", 2)
    collapse = GroupHom(v4, z2b, {"a": "b", "c": "b"})
    with pytest.raises(RejectedEmbedding):
        amalgamated_product(AmalgamSpec(z2b, z2b, v4, collapse, collapse))


def test_unsupported_factor():
    weird = P("a b", "a b a b^-1")
    with pytest.raises(UnsupportedFactor):
        backend_for(weird, 300)


def test_trivial_edge_amalgam():
    a, b = cyclic("a", 2), cyclic("b", 2)
    spec = AmalgamSpec(a, b, TRIVIAL, GroupHom(TRIVIAL, a, {}), GroupHom(TRIVIAL, b, {}))
    assert amalgamated_product(spec) == P("a b", "a^2", "b^2")


def test_amalgam_examples_fingerprint():
    p4 = amalgamated_product(stabilizer_data(4).spec)
    stated = direct_sum(cyclic("alpha", 2), P("beta gamma sigma", "gamma^2", "sigma^2"))
    assert abelianization_invariants(p4) == abelianization_invariants(stated)
    assert all(hom_count(p4, n) == hom_count(stated, n) for n in (2, 3))
    p2 = amalgamated_product(stabilizer_data(2).spec)
    stated2 = P("beta rho gamma", "rho^4", "gamma^2", "(gamma rho)^2", "rho^2 beta rho^2 beta^-1")
    assert abelianization_invariants(p2) == abelianization_invariants(stated2)
    assert all(hom_count(p2, n) == hom_count(stated2, n) for n in (2, 3))


@pytest.fixture(scope="module", params=[2, 3, 4])
def goeritz_amalgam(request):
    return Amalgam(stabilizer_data(request.param).spec)


def test_normal_form_examples(goeritz_amalgam):
    am = goeritz_amalgam
    assert am.normal_form(GroupWord()) == am.identity()
    nf = am.normal_form(G("beta"))
    assert len(nf.syllables) == 1 and nf.syllables[0][0] == "A"


def test_conjugate_edge_generator_absorbed():
    am = Amalgam(stabilizer_data(4).spec)
    nf = am.normal_form(G("sigma alpha sigma"))
    assert nf.syllables == ()
    assert nf.edge == am.normal_form(G("alpha")).edge != am.edge.identity


def _random_amalgam_word(am, rng, n):
    names = am.presentation.generators
    return GroupWord.from_letters((rng.choice(names), rng.choice((-1, 1))) for _ in range(n))


def _pad(am, w, rng, k=3):
    rels = am.presentation.relators
    letters = list(w.letters())
    for _ in range(k):
        u = _random_amalgam_word(am, rng, rng.randint(0, 3))
        r = rng.choice(rels) ** rng.choice((-1, 1))
        i = rng.randint(0, len(letters))
        letters[i:i] = list((u * r * u.inverse()).letters())
    return GroupWord.from_letters(letters)


def test_normal_form_uniqueness_under_padding(goeritz_amalgam):
    am = goeritz_amalgam
    rng = random.Random(5)
    for _ in range(150):
        w = _random_amalgam_word(am, rng, rng.randint(0, 10))
        assert am.normal_form(_pad(am, w, rng)) == am.normal_form(w)


def test_normal_form_inverse_and_round_trip(goeritz_amalgam):
    am = goeritz_amalgam
    rng = random.Random(6)
    for _ in range(150):
        w = _random_amalgam_word(am, rng, rng.randint(0, 10))
        nf = am.normal_form(w)
        assert am.multiply(nf, am.normal_form(w.inverse())) == am.identity()
        assert am.normal_form(am.to_word(nf)) == nf
        for s, t in nf.syllables:
            assert am.is_representative(s, t)


def test_multiply_matches_concatenation(goeritz_amalgam):
    am = goeritz_amalgam
    rng = random.Random(8)
    for _ in range(100):
        u, v = (_random_amalgam_word(am, rng, rng.randint(0, 8)) for _ in range(2))
        assert am.multiply(am.normal_form(u), am.normal_form(v)) == am.normal_form(u * v)


def test_generic_finite_amalgam():
    # Z4 *_Z2 Z6, with the Z2 sitting as a^2 and b^3
    a, b, c = cyclic("a", 4), cyclic("b", 6), cyclic("c", 2)
    spec = AmalgamSpec(a, b, c, GroupHom(c, a, {"c": "a^2"}), GroupHom(c, b, {"c": "b^3"}))
    am = Amalgam(spec)
    assert am.edge_index("A") == 2 and am.edge_index("B") == 3
    assert am.normal_form(G("a^2 b^3")) == am.identity()
    nf = am.normal_form(G("a b a"))
    assert [s for s, _ in nf.syllables] == ["A", "B", "A"]


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.sampled_from(["alpha", "beta", "gamma", "sigma", "alpha_2"]),
                          st.sampled_from([-1, 1])), max_size=12))
def test_normal_form_is_a_function_of_the_element(letters):
    am = Amalgam(stabilizer_data(5).spec)
    w = GroupWord.from_letters(letters)
    nf = am.normal_form(w)
    assert am.normal_form(am.to_word(nf) * w.inverse() * w) == nf
