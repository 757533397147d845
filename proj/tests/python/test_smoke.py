import nestchroma as nc


def test_graph_basics():
    g = nc.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edges == [(0, 1), (1, 2), (2, 3)]
    assert g.has_edge(1, 0) and not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.neighbours(2) == [1, 3]
    assert g == nc.path(4)


def test_solver_and_certificate():
    g = nc.Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    assert nc.chi_nested(g) == 4
    classes = nc.nested_coloring(g)
    assert len(classes) == 4
    assert nc.is_nested_coloring(g, classes)
    assert not nc.is_nested_coloring(g, [[0, 1], [2, 3], [4, 5]])
    assert nc.chi(g) == 3
    assert not nc.is_colour_nested(g)
    assert nc.chi_nested_brute_force(g) == 4


def test_dedup_and_poset():
    g = nc.Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5)])
    assert nc.duplicate_classes(g) == [[0], [1], [2], [3], [4, 5]]
    core = nc.dedup_graph(g)
    assert core.n == 5
    assert nc.chi_nested(core) == 4
    assert nc.poset_width(core) == 4
    assert all(p != q for p, q in nc.poset_relations(core))


def test_families_and_products():
    assert nc.chi_nested(nc.petersen()) == 10
    assert nc.chi_nested(nc.kneser(6, 2)) == 15
    assert nc.chi_nested(nc.cube(3)) == 8
    assert nc.chi_nested(nc.crown(4)) == 8
    assert nc.chi_nested(nc.wheel(5)) == 6
    assert nc.chi_nested(nc.threshold_graph("idd")) == 3
    assert nc.mycielski(nc.complete(2)) == nc.cycle(5)
    assert nc.join(nc.complete(1), nc.cycle(4)) == nc.wheel(4)
    assert nc.strong_product(nc.complete(2), nc.complete(3)) == nc.complete(6)
    assert nc.chi_nested(nc.cartesian_product(nc.path(4), nc.complete(2))) == 4
    assert nc.chi_nested(nc.composition(nc.path(3), nc.complete(2))) == 6
    two_edges = nc.Graph(4, [(0, 1), (2, 3)])
    assert nc.direct_product(nc.complete(2), nc.complete(2)) == two_edges
    assert nc.chi_nested(nc.disjoint_union(nc.complete(2), nc.complete(2))) == 4


def test_io_round_trip():
    g = nc.erdos_renyi(20, 0.3, seed=5)
    assert nc.parse_graph6(nc.write_graph6(g)) == g
    parsed, labels = nc.parse_edge_list("n 3\na b\nb c\n")
    assert labels == ["a", "b", "c"]
    assert parsed == nc.path(3)
    assert nc.canonical_graph6(nc.cycle(4)) == nc.canonical_graph6(
        nc.Graph(4, [(0, 2), (2, 1), (1, 3), (3, 0)]))


def test_enumeration():
    assert len(nc.graphs_on(5)) == 34
    assert len(nc.graphs_on(5, connected=True)) == 21
    realizable, gaps = nc.classify_triples(4)
    assert (2, 4) not in gaps
    assert (2, 3) in gaps and (3, 4) in gaps
    hit = [w for c, s, w in realizable if (c, s) == (2, 4)]
    assert len(hit) == 1
    assert nc.parse_graph6(hit[0]) == nc.Graph(4, [(0, 1), (2, 3)])
