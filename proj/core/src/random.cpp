#include "clonedl/random.hpp"

namespace clonedl {

std::vector<std::string> variable_names(unsigned n) {
  std::vector<std::string> out;
  for (unsigned i = 1; i <= n; ++i) {
    out.push_back("x" + std::to_string(i));
  }
  return out;
}

Formula random_formula(std::mt19937_64& rng, const Signature& signature,
                       const std::vector<std::string>& vars, unsigned max_depth,
                       double constant_rate) {
  std::vector<ConnPtr> constants;
  std::vector<ConnPtr> functions;
  for (const auto& f : signature.connectives()) {
    (f->arity() == 0 ? constants : functions).push_back(f);
  }
  auto pick = [&](const auto& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  std::bernoulli_distribution want_constant(constant_rate);
  auto leaf = [&]() {
    if (!constants.empty() && (vars.empty() || want_constant(rng))) {
      return Formula::app(pick(constants), {});
    }
    return Formula::var(pick(vars));
  };
  if (functions.empty() || max_depth == 0 || std::bernoulli_distribution(0.3)(rng)) {
    return leaf();
  }
  const auto f = pick(functions);
  std::vector<Formula> args;
  for (unsigned j = 0; j < f->arity(); ++j) {
    args.push_back(random_formula(rng, signature, vars, max_depth - 1, constant_rate));
  }
  return Formula::app(f, std::move(args));
}

DefaultTheory random_theory(std::mt19937_64& rng, const RandomTheoryParams& params) {
  const auto vars = variable_names(params.num_vars);
  auto formula = [&] {
    return random_formula(rng, params.signature, vars, params.max_depth, params.constant_rate);
  };
  DefaultTheory T;
  T.signature = params.signature;
  const auto nw = std::uniform_int_distribution<unsigned>(0, params.max_w)(rng);
  const auto nd = std::uniform_int_distribution<unsigned>(0, params.max_d)(rng);
  for (unsigned i = 0; i < nw; ++i) {
    T.W.push_back(formula());
  }
  for (unsigned i = 0; i < nd; ++i) {
    T.D.push_back({formula(), formula(), formula()});
  }
  return T;
}

}  // namespace clonedl
