from invlat.golden import GOLDEN, compare, generate


def test_fixture_shape():
    assert len(GOLDEN["lattice_elements"]) == 10
    assert len(GOLDEN["lattice_covers"]) == 17
    assert len(GOLDEN["chain_table"]) == 12
    assert GOLDEN["br"] == GOLDEN["re"] == 12


def test_regenerated_data_matches_fixture():
    ok, diffs, _ = compare()
    assert ok, diffs


def test_generate_is_deterministic():
    assert generate() == generate()


def test_chain_images_cover_interval():
    images = {row["image"] for row in GOLDEN["chain_table"]}
    assert len(images) == 12
