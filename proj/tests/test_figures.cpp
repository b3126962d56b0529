#include "support.hpp"

#include <numbers>
#include <sstream>

using namespace diracepr;
using namespace diracepr::test;

namespace
{
constexpr double pi = std::numbers::pi;

std::string to_csv(CsvTable const& t)
{
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}
}  // namespace

TEST(Csv, Formatting)
{
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(-0.0), "0");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(std::stod(format_double(pi)), pi);
    CsvTable const t{{"x", "y"}, {{1.0, -2.5}}};
    EXPECT_EQ(to_csv(t), "x,y\n1,-2.5\n");
    EXPECT_EQ(to_csv(CsvTable{{"only"}, {}}), "only\n");
}

TEST(Linspace, Endpoints)
{
    auto const v = linspace(0, pi, 7);
    ASSERT_EQ(v.size(), 7u);
    EXPECT_EQ(v.front(), 0.0);
    EXPECT_EQ(v.back(), pi);
    expect_error([] { linspace(0, 1, 1); }, Errc::invalid_argument);
}

TEST(Fig1, ShapeAndRange)
{
    CsvTable const t = fig1_table(0.999, {0.0, pi / 4}, 61);
    EXPECT_EQ(t.header, (std::vector<std::string>{"phi_b", "theta_a", "theta_b", "delta_c"}));
    ASSERT_EQ(t.rows.size(), 2u * 61 * 61);
    double worst = 0;
    for (auto const& r : t.rows)
        worst = std::max(worst, std::abs(r[3]));
    EXPECT_GE(worst, 1.0);
    EXPECT_LE(worst, 2.0);
    EXPECT_EQ(fig1_table(0.5, {0.3}, 2).rows.size(), 4u);
}

TEST(Fig1, ZeroAtRest)
{
    CsvTable const t = fig1_table(0.0, {0.0, pi / 4, 1.0}, 17);
    for (auto const& r : t.rows)
        ASSERT_EQ(r[3], 0.0);
}

TEST(Fig1, ByteStable)
{
    EXPECT_EQ(to_csv(fig1_table(0.999, {0.0, pi / 4}, 21)),
              to_csv(fig1_table(0.999, {0.0, pi / 4}, 21)));
    expect_error([] { fig1_table(1.0, {0.0}, 5); }, Errc::invalid_argument);
    expect_error([] { fig1_table(0.5, {}, 5); }, Errc::invalid_argument);
}

TEST(Fig2, CaptionIdentity)
{
    std::vector<double> thetas{0.0, 0.3, pi / 4, 1.2, pi / 2, 2.5, pi};
    CsvTable const t = fig2_table(thetas, 73);
    ASSERT_EQ(t.rows.size(), thetas.size() * 73 * 73);
    for (auto const& r : t.rows)
    {
        double const expected = -2 * std::cos(r[1]) * std::cos(r[2]) * std::cos(r[0]) * std::cos(r[0]);
        ASSERT_NEAR(r[3], expected, 1e-12) << r[0] << " " << r[1] << " " << r[2];
    }
}

TEST(Fig2, SpecialRows)
{
    EXPECT_EQ(fig2_delta_c(0.0, 0.0, 0.0), -2.0);
    EXPECT_NEAR(fig2_delta_c(pi, 0.0, pi), 2.0, 1e-15);
    EXPECT_NEAR(fig2_delta_c(0.4, pi / 2, 1.0), 0.0, 1e-16);
    for (auto const& r : fig2_table({pi / 2}, 9).rows)
        EXPECT_NEAR(r[3], 0.0, 1e-15);
}
