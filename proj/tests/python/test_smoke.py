import pytest

import tradeforge as tf


def vol3_trade():
    return tf.SignedTrade(3, [(0, 1), (3, -1), (6, -1), (5, -1), (7, 2)])


def test_is_trade():
    t = vol3_trade()
    assert tf.is_trade(t, 1)
    assert not tf.is_trade(t, 2)
    assert tf.volume(t) == 3
    assert tf.foundation(t) == 7


def test_shift_projection():
    t = vol3_trade()
    s = tf.shift(t, 7)
    assert tf.is_trade(s, 1)
    p = tf.projection(t, 3)
    assert tf.volume(p) == 2
    assert tf.replication(t, 1) == 2


def test_unitrade_and_kasami():
    u = tf.Unitrade(5, [28, 25, 26, 19, 7, 11])
    assert tf.is_unitrade(u, 1)
    assert tf.affine_rank(u) == 4
    tag, i, afrk, vol = tf.kasami_classify(u, 1)
    assert (tag, i, afrk, vol) == ("type-A", 0, 4, 3)


def test_canonical_key_and_aut():
    a = tf.SignedTrade(2, [(0, 1), (1, -1), (2, -1), (3, 1)])
    b = tf.shift(a, 3)
    assert tf.canonical_key(a) == tf.canonical_key(b)
    assert tf.are_equivalent(a, b)
    assert tf.aut_size(a) == 8


def test_spectrum_trade():
    t = tf.spectrum_trade(2, 0, "ii")
    assert tf.is_trade(t, 2)
    assert tf.volume(t) == 9
    assert t.is_simple


def test_split():
    found = tf.split_unitrade(tf.Unitrade(2, [0, 1, 2, 3]), 1)
    assert found is not None and tf.is_trade(found, 1)
    shadow = tf.split_unitrade(tf.Unitrade(5, [28, 25, 26, 19, 7, 11]), 1)
    assert shadow is not None and tf.volume(shadow) == 3


def test_class_counts():
    counts = tf.class_counts(1, 3, 3)
    assert counts[2] == (2, 1, 2, 1)
    assert counts[3] == (1, 1, 0, 0)


def test_json_round_trip():
    t = vol3_trade()
    assert tf.trade_from_json(tf.trade_to_json(t)) == t
