import pytest
from hypothesis import given, strategies as st

from artist.diagnostics import (
    CHECK_ACRONYM_UNEXPANDED,
    CHECK_AGGRESSIVE_COMPRESSION,
    CHECK_ENTITY_DROPPED,
    CHECK_LOW_FREQUENCY_WORD,
    CHECK_NUMBER_DROPPED,
    CHECK_NUMBER_MUTATION,
    CHECK_SENTENCE_TOO_LONG,
    DiagnosticsConfig,
    check_acronym_expansion,
    check_entity_retention,
    check_low_frequency_words,
    check_number_preservation,
    check_sentence_length,
    extract_numbers,
    normalize_number,
    run_diagnostics,
)
from artist.errors import EmptyTextError
from artist.segmentation import FrequencyList

PRESERVATION_CHECKS = {
    CHECK_NUMBER_MUTATION,
    CHECK_NUMBER_DROPPED,
    CHECK_ENTITY_DROPPED,
    CHECK_AGGRESSIVE_COMPRESSION,
}

CONGRESS_SOURCE = "Dit was de start van het 18e Internationale Vrouwencongres in 1915."
CONGRESS_MUTATED = "Dit was de start van het 18e Internationale Vrouwencongres in 2015."

HUYGENS_SOURCE = (
    "Christiaan Huygens wordt in 1629 geboren als tweede zoon van Suzanna van Baerle "
    "en Constantijn Huygens, dichter en secretaris van twee prinsen van Oranje."
)
HUYGENS_SIMPLIFIED = (
    "Hij wordt geboren als tweede zoon van Suzanna van Baerle. "
    "Hij was secretaris van twee prinsen van Oranje."
)


class TestExtractNumbers:
    def test_year(self):
        assert extract_numbers("in 1915.") == {"1915": 1}

    def test_ordinal_and_year(self):
        assert extract_numbers("18e congres in 1915") == {"18": 1, "1915": 1}

    def test_no_numbers(self):
        assert extract_numbers("geen cijfers") == {}

    def test_thousands_separator_stripped(self):
        assert extract_numbers("1.000 mensen") == {"1000": 1}

    @pytest.mark.parametrize(
        "surface,expected",
        [("18e", "18"), ("2de", "2"), ("1ste", "1"), ("1.000", "1000"), ("1,5", "1,5"), ("3.5", "3.5")],
    )
    def test_normalize(self, surface, expected):
        assert normalize_number(surface) == expected


class TestNumberPreservation:
    def test_year_mutation(self):
        findings = check_number_preservation(CONGRESS_SOURCE, CONGRESS_MUTATED)
        assert len(findings) == 1
        finding = findings[0]
        assert finding.check_id == CHECK_NUMBER_MUTATION
        assert finding.severity == "error"
        assert "1915" in finding.message and "2015" in finding.message
        assert CONGRESS_SOURCE[slice(*finding.source_span)] == "1915"
        assert CONGRESS_MUTATED[slice(*finding.simplified_span)] == "2015"

    def test_identity_has_no_findings(self):
        assert check_number_preservation(CONGRESS_SOURCE, CONGRESS_SOURCE) == []

    def test_dropped_number(self):
        findings = check_number_preservation(
            "Hij leefde van 1629 tot 1657 in Den Haag.", "Hij leefde vanaf 1629 daar."
        )
        assert [f.check_id for f in findings] == [CHECK_NUMBER_DROPPED]
        assert "1657" in findings[0].message

    def test_magnitude_classes_do_not_pair(self):
        # a dropped year and an invented small integer are not a mutation
        findings = check_number_preservation("Het jaar 1915 was druk.", "Wel 30 keer was het druk.")
        assert [f.check_id for f in findings] == [CHECK_NUMBER_DROPPED]

    def test_ordinal_suffix_matches_bare_number(self):
        assert check_number_preservation("het 18e congres", "het 18 congres") == []

    def test_invented_number_without_pair_is_silent(self):
        assert check_number_preservation("De kat zit.", "De kat zit er 3 keer.") == []


class TestEntityRetention:
    def test_huygens_dropped(self):
        findings = check_entity_retention(HUYGENS_SOURCE, HUYGENS_SIMPLIFIED)
        dropped = [f for f in findings if f.check_id == CHECK_ENTITY_DROPPED]
        assert len(dropped) >= 1
        assert any("Huygens" in f.message for f in dropped)

    def test_identity_has_no_findings(self):
        assert check_entity_retention(HUYGENS_SOURCE, HUYGENS_SOURCE) == []

    def test_token_overlap_suffices(self):
        findings = check_entity_retention(
            "Anton de Kom schreef.", "Anton de Kom schreef een boek."
        )
        assert findings == []

    def test_sentence_initial_capital_is_not_an_entity(self):
        assert check_entity_retention("Vandaag regent het.", "Het regent.") == []

    def test_span_points_at_entity(self):
        source = "Hij zag Constantijn Huygens gisteren."
        findings = check_entity_retention(source, "Hij zag hem gisteren.")
        assert len(findings) == 1
        assert source[slice(*findings[0].source_span)] == "Constantijn Huygens"


class TestAcronymExpansion:
    def test_unexpanded_acronym(self):
        findings = check_acronym_expansion("De EEG is een douane-unie.")
        assert [f.check_id for f in findings] == [CHECK_ACRONYM_UNEXPANDED]
        assert "EEG" in findings[0].message

    def test_preceding_expansion(self):
        text = "De Europese Economische Gemeenschap (EEG) is opgericht. De EEG bestaat nog."
        assert check_acronym_expansion(text) == []

    def test_following_expansion(self):
        text = "De EEG (Europese Economische Gemeenschap) is een douane-unie."
        assert check_acronym_expansion(text) == []

    def test_no_uppercase_runs(self):
        assert check_acronym_expansion("alles is klein geschreven.") == []

    def test_initials_must_match(self):
        text = "De Verenigde Naties (EEG) zijn iets anders."
        findings = check_acronym_expansion(text)
        assert len(findings) == 1

    def test_only_first_occurrence_counts(self):
        text = "De EEG is oud. De EEG is groot. De EEG is weg."
        assert len(check_acronym_expansion(text)) == 1


class TestSentenceLength:
    def test_over_budget(self):
        words = " ".join(["woord"] * 20) + "."
        findings = check_sentence_length(words, DiagnosticsConfig(max_sentence_words=15))
        assert [f.check_id for f in findings] == [CHECK_SENTENCE_TOO_LONG]

    def test_budget_is_inclusive(self):
        words = " ".join(["woord"] * 15) + "."
        assert check_sentence_length(words, DiagnosticsConfig(max_sentence_words=15)) == []

    def test_per_sentence_findings(self):
        def sentence(n):
            return "Woord " + " ".join(["woord"] * (n - 1)) + "."

        text = " ".join([sentence(16), sentence(14), sentence(18)])
        findings = check_sentence_length(text, DiagnosticsConfig(max_sentence_words=15))
        assert len(findings) == 2


class TestLowFrequencyWords:
    FREQ = FrequencyList(entries={"de": 1000, "kat": 50}, total=1050)

    def test_unknown_word_flagged(self):
        cfg = DiagnosticsConfig(freq_threshold=0.01)
        findings = check_low_frequency_words("de felis", self.FREQ, cfg)
        assert [f.check_id for f in findings] == [CHECK_LOW_FREQUENCY_WORD]
        assert findings[0].severity == "info"
        assert "felis" in findings[0].message

    def test_all_frequent(self):
        cfg = DiagnosticsConfig(freq_threshold=0.01)
        assert check_low_frequency_words("de kat", self.FREQ, cfg) == []

    def test_repeated_rare_word_reported_once(self):
        cfg = DiagnosticsConfig(freq_threshold=0.01)
        findings = check_low_frequency_words("felis felis felis", self.FREQ, cfg)
        assert len(findings) == 1


class TestRunDiagnostics:
    FREQ = FrequencyList(entries={"de": 800, "kat": 100, "zit": 100}, total=1000)

    def test_congress_regression(self):
        findings = run_diagnostics(CONGRESS_SOURCE, CONGRESS_MUTATED)
        mutations = [f for f in findings if f.check_id == CHECK_NUMBER_MUTATION]
        assert len(mutations) == 1

    def test_huygens_regression(self):
        findings = run_diagnostics(HUYGENS_SOURCE, HUYGENS_SIMPLIFIED)
        assert any(f.check_id == CHECK_ENTITY_DROPPED for f in findings)

    def test_aggressive_compression(self):
        source = " ".join(["woord"] * 100) + "."
        simplified = " ".join(["woord"] * 30) + "."
        findings = run_diagnostics(source, simplified, cfg=DiagnosticsConfig())
        assert any(f.check_id == CHECK_AGGRESSIVE_COMPRESSION for f in findings)

    def test_identity_produces_no_preservation_findings(self):
        findings = run_diagnostics(HUYGENS_SOURCE, HUYGENS_SOURCE, freq=self.FREQ)
        assert all(f.check_id not in PRESERVATION_CHECKS for f in findings)

    def test_empty_text_rejected(self):
        with pytest.raises(EmptyTextError):
            run_diagnostics("", "iets")
        with pytest.raises(EmptyTextError):
            run_diagnostics("iets", "  ")

    def test_deterministic_and_ordered(self):
        first = run_diagnostics(HUYGENS_SOURCE, HUYGENS_SIMPLIFIED, freq=self.FREQ)
        second = run_diagnostics(HUYGENS_SOURCE, HUYGENS_SIMPLIFIED, freq=self.FREQ)
        assert first == second

    def test_spans_inside_bounds(self):
        findings = run_diagnostics(CONGRESS_SOURCE, CONGRESS_MUTATED, freq=self.FREQ)
        for finding in findings:
            if finding.source_span:
                assert 0 <= finding.source_span[0] < finding.source_span[1] <= len(CONGRESS_SOURCE)
            if finding.simplified_span:
                assert (
                    0
                    <= finding.simplified_span[0]
                    < finding.simplified_span[1]
                    <= len(CONGRESS_MUTATED)
                )

    @given(
        st.lists(
            st.sampled_from(
                [
                    "De kat zit in 1915 op de mat.",
                    "Constantijn Huygens schreef veel.",
                    "De EEG is een douane-unie.",
                    "Wel 1.000 mensen kwamen kijken.",
                    "Het 18e congres was in Den Haag!",
                ]
            ),
            min_size=1,
            max_size=5,
        )
    )
    def test_identity_property(self, parts):
        text = " ".join(parts)
        findings = run_diagnostics(text, text, freq=self.FREQ)
        assert all(f.check_id not in PRESERVATION_CHECKS for f in findings)
