import pytest
from corpus import word_corpus, random_words

from cremaps import (
    GeneratorWord,
    HyperbolismPower,
    NotCremonaError,
    PermToken,
    Permutation,
    Steiner,
    SupportPatternError,
    basic_generators,
    classify,
    compose,
    decompose,
    evaluate_word,
    format_map,
    hyperbolism_inverse,
    hyperbolism_power,
    identity_map,
    invert,
    invert3_closed_form,
    maps_equal,
    normal_form,
    parse_map,
    permute_map,
    reduce_canonical,
    steiner_map,
)

SWAP13 = Permutation((2, 1, 0))


class TestGenerators:
    def test_d2(self):
        s, h, g = basic_generators(2)
        assert format_map(s) == "x1*x2, x1*x3, x2*x3"
        assert format_map(h) == "x1^2, x1*x2, x2*x3"
        assert format_map(g) == "x1*x2, x2^2, x1*x3"

    def test_d3_closed_form(self):
        _, h2, _ = basic_generators(3)
        assert format_map(h2) == "x1^3, x1^2*x2, x2^2*x3"

    def test_inverse_pair(self):
        for d in range(2, 7):
            _, hd, gd = basic_generators(d)
            assert maps_equal(compose(hd, gd), identity_map(3))
            assert maps_equal(compose(gd, hd), identity_map(3))

    def test_iterated_composition_matches_closed_form(self):
        h = hyperbolism_power(1)
        for d in range(2, 7):
            acc = h
            for _ in range(d - 2):
                acc = compose(acc, h)
            assert maps_equal(acc, hyperbolism_power(d - 1))

    def test_steiner_involution(self):
        s = steiner_map()
        assert maps_equal(compose(s, s), identity_map(3))

    def test_transposition_conjugacy(self):
        s = steiner_map()
        for d in range(2, 7):
            hd = hyperbolism_power(d - 1)
            sh = compose(s, hd)
            hs = compose(hd, s)
            assert maps_equal(sh, permute_map(hs, SWAP13, SWAP13))

    def test_degree_bound(self):
        with pytest.raises(ValueError):
            basic_generators(1)

    def test_g2_is_the_inverse_of_h(self):
        assert invert(hyperbolism_power(1)).as_map().log_matrix == hyperbolism_inverse(2).log_matrix


class TestEvaluateWord:
    def test_double_steiner(self):
        w = GeneratorWord((Steiner(), Steiner()))
        assert maps_equal(evaluate_word(w), identity_map(3))

    def test_single_hyperbolism(self):
        w = GeneratorWord((HyperbolismPower(1),))
        assert maps_equal(evaluate_word(w), hyperbolism_power(1))

    def test_steiner_then_h2(self):
        w = GeneratorWord((Steiner(), HyperbolismPower(2)))
        assert format_map(evaluate_word(w)) == "x1^3, x1*x2*x3, x2^2*x3"

    def test_empty_word_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            evaluate_word(GeneratorWord(()))

    def test_perm_token_sources_and_targets(self):
        rho = Permutation((1, 2, 0))
        w = GeneratorWord((PermToken(rho, Permutation.identity(3)),))
        f = evaluate_word(w)
        for j in range(3):
            assert f.monomial(j)[rho(j)] == 1

    def test_serialization(self):
        w = GeneratorWord(
            (Steiner(), HyperbolismPower(2), PermToken(Permutation.from_one_line("132"),
                                                       Permutation.from_one_line("213")))
        )
        assert w.text() == "S.H^2.P(132|213)"
        assert w.to_json()[1] == {"kind": "hyperbolism", "power": 2}


class TestClassify:
    def test_steiner_form(self):
        case = classify(parse_map("x1*x2, x2*x3, x1*x3"))
        assert case.tag == "IIIe"
        assert case.source.is_identity() and case.target.is_identity()

    def test_case_one(self):
        case = classify(parse_map("x1^3, x2*x3^2, x1^2*x3"))
        assert case.tag == "I"
        assert case.degree == 3

    def test_not_cremona_rejected(self):
        with pytest.raises(NotCremonaError):
            classify(parse_map("x1^2, x2^2, x3^2"))

    def test_no_pattern_match(self):
        # x1*x2*x3 misses no variable, so no permutation fits the pattern
        f = parse_map("x1^3, x1*x2*x3, x2^2*x3")
        with pytest.raises(SupportPatternError):
            classify(f)

    @pytest.mark.parametrize("tag", ["I", "II", "IIIa", "IIIb", "IIIc", "IIId"])
    @pytest.mark.parametrize("d", [2, 3, 5])
    def test_normal_forms_classify_to_their_own_tag(self, tag, d):
        case = classify(normal_form(tag, d))
        assert case.tag == tag
        assert case.source.is_identity() and case.target.is_identity()

    def test_case_iiie_form(self):
        case = classify(normal_form("IIIe", 2))
        assert case.tag == "IIIe"

    def test_stored_permutations_reach_the_normal_form(self):
        for f in word_corpus(61, 40):
            try:
                case = classify(f)
            except SupportPatternError:
                continue
            g = permute_map(f, case.source, case.target)
            assert g.log_matrix == normal_form(case.tag, case.degree).log_matrix


class TestDecompose:
    def test_steiner_is_a_single_token(self):
        w = decompose(steiner_map())
        assert w.tokens == (Steiner(),)

    def test_hyperbolism_power(self):
        w = decompose(hyperbolism_power(2))
        assert maps_equal(evaluate_word(w), hyperbolism_power(2))
        assert w.tokens == (HyperbolismPower(2),)

    def test_permutation_map(self):
        from cremaps import perm_map

        p = Permutation((2, 0, 1))
        w = decompose(perm_map(p))
        assert len(w) == 1
        assert maps_equal(evaluate_word(w), perm_map(p))

    def test_worked_composite(self):
        f = parse_map("x1^3, x1*x2*x3, x2^2*x3")
        w = decompose(f)
        assert maps_equal(evaluate_word(w), f)

    def test_not_cremona_rejected(self):
        with pytest.raises(NotCremonaError):
            decompose(parse_map("x1^2, x2^2, x3^2"))

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            decompose(identity_map(4))

    def test_random_words_recompose(self):
        for word in random_words(1999, 120):
            f = evaluate_word(word)
            w = decompose(f)
            assert maps_equal(evaluate_word(w), f)


class TestClosedFormInverse:
    def test_left_shape_example(self):
        f = reduce_canonical([[1, 1, 0], [0, 1, 0], [1, 0, 2]])
        sol = invert3_closed_form(f)
        assert sol.beta(0) == (2, 0, 0)
        assert sol.gamma == (1, 0, 2)
        assert sol.B.entries == ((2, 0, 1), (0, 1, 0), (0, 1, 1))
        assert sol == invert(f)

    def test_right_shape_example(self):
        f = reduce_canonical([[1, 0, 1], [1, 1, 0], [0, 1, 1]])
        sol = invert3_closed_form(f)
        assert sol.beta(0) == (1, 0, 1)
        assert sol.gamma == (1, 1, 1)
        assert sol.B.entries == ((1, 1, 0), (0, 1, 1), (1, 0, 1))
        assert sol == invert(f)

    def test_degree_is_preserved(self):
        for f in word_corpus(404, 40):
            sol = invert3_closed_form(f)
            assert sol.inverse_degree == f.degree
            assert sol == invert(f)

    def test_not_cremona_rejected(self):
        with pytest.raises(NotCremonaError):
            invert3_closed_form(parse_map("x1^2, x2^2, x3^2"))

    def test_wrong_dimension_rejected(self):
        with pytest.raises(ValueError):
            invert3_closed_form(identity_map(2))
