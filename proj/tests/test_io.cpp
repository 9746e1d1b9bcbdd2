#include <gtest/gtest.h>

#include <sstream>

#include "e8/io/files.hpp"

using namespace e8;
using namespace e8::io;

namespace {

template <Field S>
void round_trip(const std::string& model)
{
    std::stringstream ss;
    write_structure_constants(ss, model, model_table<S>(model));
    const auto loaded = read_structure_constants<S>(ss);
    EXPECT_EQ(loaded.header.get("model"), model);
    EXPECT_EQ(loaded.header.get("field"), scalar_traits<S>::name);
    EXPECT_TRUE(loaded.table == model_table<S>(model)) << model << " " << scalar_traits<S>::name;
}

std::string small_file(const std::string& body, const std::string& field = "qi")
{
    return "#model=wedge\n#basis-version=wedge-v1\n#field=" + field + "\n#dimension=248\n" + body;
}

}  // namespace

TEST(StructureConstants, RoundTripWedge)
{
    round_trip<Gaussian>("wedge");
    round_trip<Cyclotomic24>("wedge");
    round_trip<F64>("wedge");
}

TEST(StructureConstants, RoundTripFreudenthal)
{
    round_trip<Gaussian>("freudenthal");
    round_trip<F64>("freudenthal");
}

TEST(StructureConstants, LineCountAndExampleLine)
{
    std::stringstream ss;
    write_structure_constants(ss, "wedge", model_table<Gaussian>("wedge"));
    std::string line;
    std::size_t body = 0;
    bool example = false;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        ++body;
        if (line.rfind("72\t80\t", 0) == 0) {
            EXPECT_EQ(line, "72\t80\t80\t1");
            example = true;
        }
    }
    EXPECT_EQ(body, 8368u);
    EXPECT_TRUE(example);
}

TEST(StructureConstants, ParseErrors)
{
    auto load = [](const std::string& text) {
        std::stringstream ss(text);
        return read_structure_constants<Gaussian>(ss);
    };
    EXPECT_NO_THROW(load(small_file("0\t1\t2\t1/2\n")));
    EXPECT_THROW(load(small_file("1\t0\t2\t1\n")), ParseError);           // i > j
    EXPECT_THROW(load(small_file("0\t1\t248\t1\n")), ParseError);         // k out of range
    EXPECT_THROW(load(small_file("0\t1\t2\n")), ParseError);              // missing field
    EXPECT_THROW(load(small_file("0\t1\t2\t0\n")), ParseError);           // zero entry
    EXPECT_THROW(load(small_file("0\t1\t2\t1\n0\t1\t2\t3\n")), ParseError);  // duplicate
    EXPECT_THROW(load(small_file("0\t1\t2\tx\n")), ParseError);
    EXPECT_THROW(load(small_file("a\t1\t2\t1\n")), ParseError);
    EXPECT_THROW(load(small_file("", "f64")), ParseError);                // field mismatch
    EXPECT_THROW(load("#model=wedge\n#basis-version=wedge-v0\n#field=qi\n#dimension=248\n"), ParseError);
    EXPECT_THROW(load("#model=wedge\n#field=qi\n#dimension=248\n"), ParseError);
    const auto t = load(small_file("0\t1\t2\t1/2\n"));
    ASSERT_EQ(t.table(1, 0).size(), 1u);
    EXPECT_EQ(t.table(1, 0)[0].second, Gaussian(Rational(-1, 2)));
}

TEST(BasisFile, RoundTripAndTamper)
{
    const auto b = compute_fixed("wedge", "w4");
    ASSERT_EQ(b.vectors.size(), 64u);
    std::stringstream ss;
    write_basis(ss, b);
    const std::string text = ss.str();
    std::stringstream in(text);
    const auto back = read_basis(in);
    EXPECT_EQ(back.vectors, b.vectors);
    EXPECT_EQ(back.header.get("count"), "64");

    // a vector with a nonzero u part is not fixed by w4
    std::string tampered = text;
    const auto first_body = tampered.find('\n', tampered.rfind("#count="));
    const auto line_end = tampered.find('\n', first_body + 1);
    auto fields = split_tabs(tampered.substr(first_body + 1, line_end - first_body - 1));
    fields[80] = "1";
    fields[164] = "-1";
    std::string line;
    for (std::size_t k = 0; k < fields.size(); ++k) line += (k ? "\t" : "") + fields[k];
    tampered.replace(first_body + 1, line_end - first_body - 1, line);
    std::stringstream bad(tampered);
    EXPECT_THROW(read_basis(bad), DomainError);

    std::stringstream short_file(text.substr(0, line_end + 1));
    EXPECT_THROW(read_basis(short_file), ParseError);
}

TEST(BasisFile, FreudenthalFixedSpaces)
{
    const auto b = compute_fixed("freudenthal", "mu4");
    EXPECT_EQ(b.vectors.size(), 66u);
    EXPECT_EQ(first_unfixed(b), b.vectors.size());
    EXPECT_THROW(compute_fixed("freudenthal", "w4"), verify::UsageError);
    EXPECT_THROW(compute_fixed("octonion", "id"), verify::UsageError);
}
