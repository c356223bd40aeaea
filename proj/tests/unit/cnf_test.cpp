#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "oto/cnf.hpp"
#include "oto/normalize.hpp"
#include "oto/order.hpp"

using namespace oto;
using namespace oto::cnf;

namespace {

CnfOrdinal w() { return CnfOrdinal::omega_to(CnfOrdinal::natural(1)); }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cnf, Examples) {
  EXPECT_TRUE(cnf_of(Term()).is_zero());
  const auto three = cnf_of(Term::natural(3));
  ASSERT_EQ(three.terms.size(), 1u);
  EXPECT_TRUE(three.terms[0].exponent.is_zero());
  EXPECT_EQ(three.terms[0].multiplicity, 3u);

  const Term e = add(omega_power(Term::natural(1)), Term::natural(1));
  const auto v = cnf_of(omega_power(e));
  ASSERT_EQ(v.terms.size(), 1u);
  EXPECT_EQ(v.terms[0].exponent, cnf_add(w(), CnfOrdinal::natural(1)));
  EXPECT_EQ(v.terms[0].multiplicity, 1u);
}

TEST(Cnf, CompareAndAdd) {
  EXPECT_EQ(cnf_compare(CnfOrdinal::omega_to(w()), CnfOrdinal::omega_to(CnfOrdinal::natural(1), 5)),
            CnfOrder::kGreater);
  EXPECT_EQ(cnf_add(CnfOrdinal::natural(1), w()), w());
  const auto w1 = cnf_add(w(), CnfOrdinal::natural(1));
  EXPECT_EQ(to_string(w1), "w^(1) + 1");
  EXPECT_EQ(cnf_compare(w1, w()), CnfOrder::kGreater);
  EXPECT_EQ(cnf_add(CnfOrdinal::natural(2), CnfOrdinal::natural(3)), CnfOrdinal::natural(5));
}

TEST(Cnf, RejectsOutsideFragment) {
  EXPECT_THROW(cnf_of(Term::omega()), OutOfFragment);
  EXPECT_THROW(cnf_of(make_collapse(Term::natural(1), Term())), OutOfFragment);
}

// The oracle must stay independent of the comparison it checks.
TEST(BuildStructure, CnfDoesNotUseOrder) {
  const std::string root = OTO_SOURCE_DIR;
  const std::regex forbidden(R"(#\s*include\s*[<"]oto/(order|normalize|coefficients|enumerate)\.hpp[>"])");
  for (const auto& file : {root + "/core/src/cnf.cpp", root + "/core/include/oto/cnf.hpp"}) {
    const std::string text = slurp(file);
    ASSERT_FALSE(text.empty()) << file;
    EXPECT_FALSE(std::regex_search(text, forbidden)) << file;
    EXPECT_FALSE(std::regex_search(text, std::regex(R"((^|[^_A-Za-z])(compare|add|max_term)\()"))) << file;
  }
  const std::string cmake = slurp(root + "/core/CMakeLists.txt");
  const std::regex link(R"(target_link_libraries\(oto_cnf[^)]*\))");
  std::smatch m;
  ASSERT_TRUE(std::regex_search(cmake, m, link));
  EXPECT_EQ(m.str().find("oto_core"), std::string::npos);
}
