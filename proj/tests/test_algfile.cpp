#include <doctest.h>

#include "flataffine/algfile.hpp"
#include "flataffine/cohomology.hpp"

#include <filesystem>

using namespace flataffine;

namespace {

void check_same(const catalog::Entry& a, const catalog::Entry& b)
{
    CHECK(a.name == b.name);
    CHECK(a.algebra == b.algebra);
    REQUIRE(a.product.has_value() == b.product.has_value());
    if (a.product)
        CHECK(*a.product == *b.product);
    REQUIRE(a.forms.size() == b.forms.size());
    for (std::size_t i = 0; i < a.forms.size(); ++i) {
        CHECK(a.forms[i].first == b.forms[i].first);
        CHECK(a.forms[i].second.kind == b.forms[i].second.kind);
        CHECK(a.forms[i].second.m == b.forms[i].second.m);
    }
    REQUIRE(a.bivector.has_value() == b.bivector.has_value());
    if (a.bivector) {
        CHECK(a.bivector->r == b.bivector->r);
        CHECK(a.bivector->algebra == b.bivector->algebra);
    }
}

std::size_t error_line(const std::string& text)
{
    try {
        parse_algebra_file_text(text);
    } catch (const AlgebraFileError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

} // namespace

TEST_CASE("sample entries survive a serialization round trip")
{
    for (const auto& entry : catalog::sample_entries()) {
        CAPTURE(entry.name);
        const std::string text = write_algebra_file(entry);
        auto back = parse_algebra_file_text(text);
        check_same(entry, back);
        // writing is canonical: a second round trip reproduces the text
        CHECK(write_algebra_file(back) == text);
    }
}

TEST_CASE("zero product table survives a round trip")
{
    catalog::Entry e;
    e.name = "zero3";
    e.algebra = StructureConstants(3, {"a", "b", "c"});
    e.product = ProductTable(3, {"a", "b", "c"});
    auto back = parse_algebra_file_text(write_algebra_file(e));
    check_same(e, back);
}

TEST_CASE("fixture: perturbed fourth family fails left-symmetry")
{
    auto entry = load_algebra_file(std::string(TESTS_DATA_DIR) + "/perturbed-F4.alg");
    CHECK(entry.name == "perturbed-F4");
    REQUIRE(entry.algebra.dim() == 4);
    REQUIRE(entry.product.has_value());
    CHECK(check_jacobi(entry.algebra).ok);
    auto rep = is_left_symmetric(*entry.product);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.violations.empty());
    CHECK_FALSE(is_flat(*entry.product, entry.algebra));
    // compatibility is untouched by perturbing the symmetric d.d entry
    CHECK(is_compatible(*entry.product, entry.algebra).ok);
}

TEST_CASE("fixture: two-dimensional zero product")
{
    auto entry = load_algebra_file(std::string(TESTS_DATA_DIR) + "/zero2.alg");
    CHECK(entry.name == "zero2");
    REQUIRE(entry.product.has_value());
    CHECK(entry.product->entries().empty());
    CHECK(cohomology(*entry.product).dim_h2 == 4);
}

TEST_CASE("fixture: garbage input is rejected with its line number")
{
    CHECK_THROWS_AS(load_algebra_file(std::string(TESTS_DATA_DIR) + "/garbage.alg"),
                    AlgebraFileError);
    CHECK(error_line("this is not an algebra file\n") == 1);
}

TEST_CASE("parse errors carry the offending line")
{
    CHECK(error_line("dim 3\nbasis a b c\nbracket 1 0 0 1\n") == 3); // i < j
    CHECK(error_line("dim 2\nbasis a b\ndim 2\n") == 3);             // duplicate
    CHECK(error_line("bracket 0 1 0 1\n") == 1);          // needs dim first
    CHECK(error_line("dim 2\nbasis a b\nproduct 0 0 0 x\n") == 3);
    CHECK(error_line("dim 2\nbasis a\n") == 2);           // label count
    CHECK(error_line("dim 2\nbasis a b\nproduct 0 0 5 1\n") == 3);
    CHECK(error_line("dim 0\n") == 1);
    CHECK(error_line("dim 2\nbasis a b\nproduct 0 0 0 1\nproduct 0 0 0 2\n") == 4);
    CHECK(error_line("name x\n") == 1); // missing dim at end of file
    // symmetry violations point at the form header
    CHECK(error_line("dim 2\nbasis a b\nform k symmetric\n0 1\n-1 0\n") == 3);
    CHECK(error_line("dim 2\nbasis a b\nform k symmetric\n0 1 2\n") == 4);
    CHECK(error_line("dim 2\nbasis a b\nbivector\n0 1\n") == 4); // EOF in block
    CHECK(error_line("dim 2\nbasis a b\nfrobnicate 1\n") == 3);  // unknown key
}

TEST_CASE("comments and blank lines are ignored")
{
    auto entry = parse_algebra_file_text("# header\n\nname c2  # trailing\n"
                                         "dim 2\nbasis x y\n\n# done\n");
    CHECK(entry.name == "c2");
    CHECK(entry.algebra.dim() == 2);
    CHECK_FALSE(entry.product.has_value());
}

TEST_CASE("file names supply missing entry names")
{
    auto dir = std::filesystem::temp_directory_path();
    auto path = dir / "roundtrip-osc.alg";
    catalog::Entry e;
    e.name = "unnamed";
    e.algebra = catalog::heisenberg();
    save_algebra_file(e, path);
    auto back = load_algebra_file(path);
    CHECK(back.name == "roundtrip-osc");
    CHECK(back.algebra == catalog::heisenberg());
    std::filesystem::remove(path);
}
