import random

import pytest

from qhopf.catalog import non_ip_loop
from qhopf.errors import (BadShape, NoIdentity, NotAssociative, NotLatinSquare, OracleInconsistent,
                          ParseError, SampleRequired)
from qhopf.quasigroup import (OracleQuasigroup, associativity_witness, chein_double,
                              chein_double_oracle, check_ip, cyclic_group, from_cayley_table,
                              infinite_dihedral_oracle, integer_oracle, is_associative,
                              is_commutative, left_divide, load_table, parse_table_json,
                              parse_table_text, right_divide, symmetric_group)


def test_cayley_validation():
    c2 = from_cayley_table(["e", "g"], [[0, 1], [1, 0]], "e")
    assert c2.order == 2
    with pytest.raises(NotLatinSquare):
        from_cayley_table(["e", "g"], [[0, 0], [1, 1]], "e")
    with pytest.raises(BadShape):
        from_cayley_table(["e", "g"], [[0, 1]], "e")
    with pytest.raises(BadShape):
        from_cayley_table(["e", "g"], [[0, 1], [1, 2]], "e")
    # x*y = -x-y mod 5 is a Latin square without identity
    table = [[(-x - y) % 5 for y in range(5)] for x in range(5)]
    with pytest.raises(NoIdentity):
        from_cayley_table(list("01234"), table, "0")


def test_s3_is_a_group():
    s3 = symmetric_group(3)
    assert s3.order == 6 and is_associative(s3) and not is_commutative(s3)
    assert check_ip(s3).passed


def test_divisions_and_inverses(m12):
    c2 = cyclic_group(2)
    assert left_divide(c2, 1, 0) == 1
    for u in m12.elements():
        assert m12.inverse(m12.inverse(u)) == u
        for w in m12.elements():
            assert m12.product(u, left_divide(m12, u, w)) == w
            assert m12.product(right_divide(m12, w, u), u) == w


def test_check_ip_counts(m12):
    rep = check_ip(m12)
    assert rep.passed and rep.checked["ip_left"] == 144 and rep.checked["ip_right"] == 144
    assert not check_ip(cyclic_group(4)).violations
    bad = check_ip(non_ip_loop())
    assert not bad.passed and bad.violations[0].witness


def test_chein_double():
    assert is_associative(chein_double(cyclic_group(2))) and chein_double(cyclic_group(2)).order == 4
    c3 = chein_double(cyclic_group(3))
    assert c3.order == 6 and is_associative(c3)
    for n in range(2, 7):
        assert is_associative(chein_double(cyclic_group(n)))
    m = chein_double(symmetric_group(3))
    assert m.order == 12 and check_ip(m).passed
    u, v, w = associativity_witness(m)
    assert m.product(m.product(u, v), w) != m.product(u, m.product(v, w))
    with pytest.raises(NotAssociative):
        chein_double(m)


def test_oracles():
    z = integer_oracle()
    assert z.left_divide(3, 10) == 7 and z.right_divide(10, 3) == 7
    assert not z.is_finite
    with pytest.raises(SampleRequired):
        check_ip(z)
    assert check_ip(z, list(range(-5, 6))).passed
    d = infinite_dihedral_oracle()
    sample = d.sample(10, random.Random(3))
    assert check_ip(d, sample).passed
    cd = chein_double_oracle(d)
    assert check_ip(cd, cd.sample(8, random.Random(1))).passed
    broken = OracleQuasigroup(lambda a, b: a + b + 1, 0, lambda a: -a, name="broken")
    with pytest.raises(OracleInconsistent):
        broken.left_divide(2, 5)


def test_text_format_round_trip(tmp_path, m12):
    text = m12.to_text()
    back = parse_table_text(text)
    assert back.labels == m12.labels and back.table == m12.table
    p = tmp_path / "m.json"
    p.write_text(m12.to_json())
    assert load_table(p).table == m12.table
    assert parse_table_json('{"labels": ["e"], "table": [[0]], "identity": "e"}').order == 1


@pytest.mark.parametrize("text,line", [
    ("", 1),
    ("x\n", 1),
    ("2\na\n", 2),
    ("2\na b\na b\n", 4),
    ("2\na b\na b\nb c\n", 4),
    ("2\na b\na b\nb a\nextra\n", 5),
])
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_table_text(text)
    assert exc.value.line == line
    assert str(exc.value).startswith(f"line {line}:")


def test_trivial_loop():
    e = from_cayley_table(["e"], [[0]], "e")
    assert check_ip(e).passed and is_associative(e)
