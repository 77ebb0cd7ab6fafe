#include "ssf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "ssf/acceptance.hpp"
#include "ssf/io.hpp"

namespace ssf::cli {

namespace {

const std::vector<std::string> kTopKeys{"field",   "alpha",    "gram",     "variant", "seed",   "budgets",
                                        "mu",      "mu_list",  "mu_range", "workers", "format", "output"};
const std::vector<std::string> kBudgetKeys{"bruteforce", "norm_one", "axet_cap", "samples"};
constexpr std::size_t kMaxSweep = 100000;

void require_known(const json& obj, const std::vector<std::string>& keys, const std::string& where) {
  for (const auto& [key, _] : obj.items())
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      fail(ErrorCode::ConfigError, "unknown key '" + key + "' in " + where);
}

std::uint64_t positive(const json& j, const std::string& name) {
  if (!j.is_number_integer() || j.get<std::int64_t>() <= 0)
    fail(ErrorCode::ConfigError, name + " must be a positive integer");
  return j.get<std::uint64_t>();
}

struct Budgets {
  std::uint64_t bruteforce = kDefaultBruteforceBudget;
  std::uint64_t norm_one = kDefaultNormOneBudget;
  std::size_t axet_cap = kDefaultAxetCap;
  std::size_t samples = kCoverFamilySamples;
};

/// Everything in the config that does not depend on the field.
struct Common {
  Budgets budgets;
  std::uint64_t seed = acceptance::kDefaultSeed;
  Variant variant = Variant::SplitSpin;
  unsigned workers = 1;
};

Common parse_common(const json& cfg) {
  if (!cfg.is_object()) fail(ErrorCode::ConfigError, "config must be a JSON object");
  require_known(cfg, kTopKeys, "config");
  Common c;
  if (cfg.contains("budgets")) {
    const json& b = cfg.at("budgets");
    if (!b.is_object()) fail(ErrorCode::ConfigError, "budgets must be an object");
    require_known(b, kBudgetKeys, "budgets");
    if (b.contains("bruteforce")) c.budgets.bruteforce = positive(b.at("bruteforce"), "budgets.bruteforce");
    if (b.contains("norm_one")) c.budgets.norm_one = positive(b.at("norm_one"), "budgets.norm_one");
    if (b.contains("axet_cap")) c.budgets.axet_cap = positive(b.at("axet_cap"), "budgets.axet_cap");
    if (b.contains("samples")) c.budgets.samples = positive(b.at("samples"), "budgets.samples");
  }
  if (cfg.contains("seed")) {
    const json& seed = cfg.at("seed");
    if (!seed.is_number_integer() || seed.get<std::int64_t>() < 0)
      fail(ErrorCode::ConfigError, "seed must be a non-negative integer");
    c.seed = cfg.at("seed").get<std::uint64_t>();
  }
  if (cfg.contains("variant")) {
    const json& v = cfg.at("variant");
    if (v == "split_spin") c.variant = Variant::SplitSpin;
    else if (v == "cover") c.variant = Variant::ExceptionalCover;
    else fail(ErrorCode::ConfigError, "variant must be 'split_spin' or 'cover'");
  }
  if (cfg.contains("workers"))
    c.workers = static_cast<unsigned>(std::min<std::uint64_t>(positive(cfg.at("workers"), "workers"), 256));
  if (cfg.contains("format")) {
    const json& fmt = cfg.at("format");
    if (fmt != "json" && fmt != "text") fail(ErrorCode::ConfigError, "format must be 'json' or 'text'");
  }
  if (cfg.contains("output") && !cfg.at("output").is_string()) fail(ErrorCode::ConfigError, "output must be a path");
  return c;
}

template <class S>
struct Context {
  Field<S> field;
  Common common;
  std::optional<S> alpha;
  std::optional<Matrix<S>> gram;
  std::optional<S> two_gen_mu;
  std::vector<S> mus;

  const Matrix<S>& require_gram() const {
    if (!gram) fail(ErrorCode::ConfigError, "this command needs a gram");
    return *gram;
  }
  const S& require_alpha() const {
    if (!alpha) fail(ErrorCode::ConfigError, "this command needs alpha for the split spin variant");
    return *alpha;
  }
  bool cover() const { return common.variant == Variant::ExceptionalCover; }
  QuadraticSpace<S> space() const { return QuadraticSpace<S>(field, require_gram()); }
  Algebra<S> algebra() const {
    return cover() ? build_exceptional(space()) : build_split_spin(space(), require_alpha());
  }
};

template <class S>
std::vector<S> parse_mu_range(const Field<S>& f, const json& r) {
  if (!r.is_object()) fail(ErrorCode::ConfigError, "mu_range must be an object");
  require_known(r, {"from", "to", "step"}, "mu_range");
  if (!r.contains("from") || !r.contains("to")) fail(ErrorCode::ConfigError, "mu_range needs from and to");
  std::vector<S> out;
  if constexpr (std::is_same_v<S, ModP>) {
    // Over F_p the range runs over integer representatives.
    auto as_int = [](const json& j, const char* name) {
      if (!j.is_number_integer()) fail(ErrorCode::ConfigError, std::string("mu_range.") + name + " must be an integer over F_p");
      return j.get<long>();
    };
    const long from = as_int(r.at("from"), "from"), to = as_int(r.at("to"), "to");
    const long step = r.contains("step") ? as_int(r.at("step"), "step") : 1;
    if (step <= 0) fail(ErrorCode::ConfigError, "mu_range.step must be positive");
    for (long m = from; m <= to; m += step) {
      out.push_back(f(m));
      if (out.size() > kMaxSweep) fail(ErrorCode::ConfigError, "mu_range is too long");
    }
  } else {
    const S from = io::scalar_from_json(f, r.at("from")), to = io::scalar_from_json(f, r.at("to"));
    const S step = r.contains("step") ? io::scalar_from_json(f, r.at("step")) : f.one();
    if (!(f.zero() < step)) fail(ErrorCode::ConfigError, "mu_range.step must be positive");
    for (S m = from; !(to < m); m = m + step) {
      out.push_back(m);
      if (out.size() > kMaxSweep) fail(ErrorCode::ConfigError, "mu_range is too long");
    }
  }
  return out;
}

template <class S>
Context<S> parse_context(const Field<S>& f, const json& cfg, const Common& common) {
  Context<S> ctx{f, common, std::nullopt, std::nullopt, std::nullopt, {}};
  if (cfg.contains("alpha")) ctx.alpha = io::scalar_from_json(f, cfg.at("alpha"));
  if (cfg.contains("gram")) {
    const json& g = cfg.at("gram");
    if (g.is_object()) {
      require_known(g, {"two_gen_mu"}, "gram");
      if (!g.contains("two_gen_mu")) fail(ErrorCode::ConfigError, "gram object needs two_gen_mu");
      ctx.two_gen_mu = io::scalar_from_json(f, g.at("two_gen_mu"));
      ctx.gram = two_gen_gram(f, *ctx.two_gen_mu);
    } else {
      ctx.gram = normalized(f, io::matrix_from_json(f, g));
    }
  }
  if (cfg.contains("mu")) ctx.mus.push_back(io::scalar_from_json(f, cfg.at("mu")));
  if (cfg.contains("mu_list")) {
    const json& l = cfg.at("mu_list");
    if (!l.is_array()) fail(ErrorCode::ConfigError, "mu_list must be an array");
    for (const auto& m : l) ctx.mus.push_back(io::scalar_from_json(f, m));
  }
  if (cfg.contains("mu_range")) {
    auto range = parse_mu_range(f, cfg.at("mu_range"));
    ctx.mus.insert(ctx.mus.end(), range.begin(), range.end());
  }
  if (ctx.mus.empty() && ctx.two_gen_mu) ctx.mus.push_back(*ctx.two_gen_mu);
  return ctx;
}

json error_json(const Error& e) {
  return json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

int exit_for(const Error& e) { return e.code() == ErrorCode::InternalError ? kVerificationFailed : kConfigError; }

Outcome verdict(json report, bool ok) {
  report["ok"] = ok;
  return Outcome{ok ? kOk : kVerificationFailed, std::move(report)};
}

template <class S>
Outcome cmd_idempotents(const Context<S>& ctx) {
  const Algebra<S> alg = ctx.algebra();
  const Field<S>& f = ctx.field;
  const auto norm_one = find_norm_one(alg.space(), ctx.common.budgets.norm_one, ctx.common.seed);
  const bool applies = f.characteristic() != 2 && !alg.meta().jordan_special;
  json report;
  report["norm_one"] = io::to_json(norm_one);
  report["classification_applies"] = applies;

  bool exhaustive = false;
  if constexpr (std::is_same_v<S, ModP>) {
    std::uint64_t total = 1;
    exhaustive = true;
    for (Index i = 0; i < alg.dim() && exhaustive; ++i) {
      total *= f.order();
      exhaustive = total <= ctx.common.budgets.bruteforce;
    }
  }

  std::vector<Vector<S>> found;
  if (exhaustive) {
    found = enumerate_idempotents_bruteforce(alg, ctx.common.budgets.bruteforce);
    report["method"] = "bruteforce";
  } else {
    // The classified list: constants first, then one or two family members
    // per norm-one vector found.
    report["method"] = "families";
    if (!ctx.cover()) {
      found.push_back(unit_element(alg));
      found.push_back(alg.basis(alg.z2()));
    }
    found.push_back(alg.basis(alg.z1()));
    if (applies)
      for (const auto& e : norm_one.vectors) {
        if (ctx.cover()) {
          found.push_back(family_axis(alg, e, Family::Exceptional));
        } else {
          found.push_back(family_axis(alg, e, Family::A));
          found.push_back(family_axis(alg, e, Family::B));
        }
      }
  }

  std::map<std::string, std::size_t> by_tag;
  json list = json::array();
  std::optional<Vector<S>> witness;
  for (const auto& x : found) {
    const auto c = classify_idempotent(alg, x);
    ++by_tag[std::string(to_string(c.tag))];
    if (c.tag == IdempotentTag::Other && !witness) witness = x;
    list.push_back(io::to_json(c));
  }
  report["count"] = found.size();
  report["by_tag"] = by_tag;
  report["other"] = by_tag["Other"];
  bool ok = true;
  if (exhaustive && applies && norm_one.status == SearchStatus::Exhaustive) {
    const std::size_t n = norm_one.vectors.size();
    const std::size_t expected = ctx.cover() ? 1 + n : 3 + 2 * n;
    report["expected_count"] = expected;
    ok = found.size() == expected && !witness;
  }
  if (applies && witness) {
    ok = false;
    report["witness"] = io::to_json(*witness);
  }
  report["idempotents"] = std::move(list);
  return verdict(std::move(report), ok);
}

template <class S>
Outcome cmd_axis_check(const Context<S>& ctx) {
  const Algebra<S> alg = ctx.algebra();
  const Field<S>& f = ctx.field;
  json axes = json::object();
  bool ok = true;
  std::optional<std::string> witness;
  auto record = [&](const std::string& label, const AxisReport<S>& r) {
    axes[label] = io::to_json(r);
    if (!r.passes() && !witness) witness = label;
    ok = ok && r.passes();
  };
  if (ctx.cover()) {
    record("z1", check_axis(alg, alg.basis(alg.z1()), jordan_law(f, S(-f.one()))));
  } else {
    const S a = alg.alpha();
    record("z1", check_axis(alg, alg.basis(alg.z1()), jordan_law(f, a)));
    record("z2", check_axis(alg, alg.basis(alg.z2()), jordan_law(f, S(f.one() - a))));
  }
  const auto search = find_norm_one(alg.space(), ctx.common.budgets.norm_one, ctx.common.seed, ctx.common.budgets.samples);
  std::size_t used = 0;
  for (const auto& e : search.vectors) {
    if (used++ == ctx.common.budgets.samples) break;
    std::string coords;
    for (Index i = 0; i < e.size(); ++i) coords += (i ? "," : "") + e(i).to_string();
    const std::vector<Family> families =
        ctx.cover() ? std::vector<Family>{Family::Exceptional} : std::vector<Family>{Family::A, Family::B};
    for (Family fam : families) {
      const std::string tag = fam == Family::A ? "a" : fam == Family::B ? "b" : "exc";
      record(tag + "(" + coords + ")", check_axis(alg, family_axis(alg, e, fam), family_law(alg, fam)));
    }
  }
  json report;
  report["axes"] = std::move(axes);
  report["norm_one"] = io::to_json(search);
  if (witness) report["witness"] = *witness;
  return verdict(std::move(report), ok);
}

template <class S>
TwoGen<S> two_gen_from(const Context<S>& ctx) {
  if (ctx.mus.size() != 1) fail(ErrorCode::ConfigError, "yabe needs exactly one mu (mu or gram.two_gen_mu)");
  return build_two_gen(TwoGenConfig<S>{ctx.field, ctx.alpha, ctx.mus.front(), ctx.common.variant});
}

template <class S>
json axet_entry(const Field<S>& f, const S& mu, std::size_t cap, bool& consistent, bool& errored) {
  json entry;
  entry["mu"] = io::to_json(mu);
  try {
    const auto result = axet(f, mu, cap);
    entry.update(io::to_json(result));
    if (result.size_kind == OrderKind::Finite && !result.consistent) consistent = false;
  } catch (const Error& e) {
    entry["error"] = error_json(e);
    errored = true;
  }
  return entry;
}

template <class S>
Outcome cmd_axet(const Context<S>& ctx) {
  if (ctx.mus.empty()) fail(ErrorCode::ConfigError, "axet needs mu, mu_list, mu_range or gram.two_gen_mu");
  const std::size_t cap = ctx.common.budgets.axet_cap;
  if (ctx.mus.size() == 1) {
    bool consistent = true, errored = false;
    json entry = axet_entry(ctx.field, ctx.mus.front(), cap, consistent, errored);
    if (errored) return Outcome{kConfigError, json{{"error", entry.at("error")}}};
    return verdict(std::move(entry), consistent);
  }
  // Sweep: entries are independent, results land in input order.
  const std::size_t n = ctx.mus.size();
  std::vector<json> entries(n);
  std::vector<char> consistent(n, 1), errored(n, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      bool c = true, e = false;
      entries[i] = axet_entry(ctx.field, ctx.mus[i], cap, c, e);
      consistent[i] = c;
      errored[i] = e;
    }
  };
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(ctx.common.workers, n));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  json report;
  report["entries"] = entries;
  const bool all_consistent = std::all_of(consistent.begin(), consistent.end(), [](char c) { return c != 0; });
  const bool any_error = std::any_of(errored.begin(), errored.end(), [](char c) { return c != 0; });
  report["ok"] = all_consistent && !any_error;
  return Outcome{any_error ? kConfigError : all_consistent ? kOk : kVerificationFailed, std::move(report)};
}

template <class S>
Outcome run(const std::string& command, const Context<S>& ctx) {
  if (command == "build") return Outcome{kOk, json{{"algebra", io::to_json(ctx.algebra())}}};
  if (command == "idempotents") return cmd_idempotents(ctx);
  if (command == "axis-check") return cmd_axis_check(ctx);
  if (command == "frobenius") {
    const auto form = frobenius(ctx.algebra());
    return verdict(json{{"form", io::to_json(form)}}, form.associative);
  }
  if (command == "radical") {
    const auto rad = algebra_radical(ctx.algebra());
    return verdict(json{{"radical", io::to_json(rad)}}, rad.is_ideal);
  }
  if (command == "simple") {
    const Algebra<S> alg = ctx.algebra();
    const auto evidence = find_norm_one(alg.space(), ctx.common.budgets.norm_one, ctx.common.seed);
    json report = io::to_json(is_simple(alg, std::optional(evidence)));
    report["norm_one"] = io::to_json(evidence);
    return Outcome{kOk, std::move(report)};
  }
  if (command == "yabe") {
    const auto data = yabe_data(two_gen_from(ctx));
    return verdict(io::to_json(data), data.spans_algebra && data.a_minus1_formula_ok);
  }
  if (command == "axet") return cmd_axet(ctx);
  if (command == "cover") {
    const auto r = verify_cover(ctx.space(), ctx.common.budgets.samples, ctx.common.budgets.norm_one, ctx.common.seed);
    json report = io::to_json(r);
    return Outcome{r.ok() ? kOk : kVerificationFailed, std::move(report)};
  }
  fail(ErrorCode::ConfigError, "unknown command '" + command + "'");
}

Outcome selftest(const Common& common) {
  json criteria = json::array();
  bool ok = true;
  for (const auto& r : acceptance::run_all(common.seed)) {
    criteria.push_back(json{{"id", r.id},
                            {"title", r.title},
                            {"passed", r.passed},
                            {"checks", r.checks},
                            {"failures", r.failures},
                            {"detail", r.detail}});
    ok = ok && r.passed;
  }
  return verdict(json{{"seed", common.seed}, {"criteria", std::move(criteria)}}, ok);
}

void render(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto inline_form = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  auto is_flat = [](const json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const json& x) {
      return x.is_primitive() || (x.is_array() && std::all_of(x.begin(), x.end(), [](const json& y) { return y.is_primitive(); }));
    });
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value) && (!value.is_array() || value.empty() || value.front().is_primitive())) {
        os << pad << key << ": " << inline_form(value) << "\n";
      } else if (is_flat(value)) {
        os << pad << key << ":\n";
        for (const auto& row : value) os << pad << "  " << row.dump() << "\n";
      } else {
        os << pad << key << ":\n";
        render(os, value, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object()) {
        os << pad << "-\n";
        render(os, item, indent + 1);
      } else {
        os << pad << "- " << inline_form(item) << "\n";
      }
    }
  } else {
    os << pad << inline_form(j) << "\n";
  }
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"build", "idempotents", "axis-check", "frobenius", "radical",
                                              "simple", "yabe",       "axet",       "cover",     "selftest"};
  return names;
}

Outcome execute(const std::string& command, const json& config) {
  try {
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      fail(ErrorCode::ConfigError, "unknown command '" + command + "'");
    const Common common = parse_common(config);
    if (command == "selftest") return selftest(common);
    if (!config.contains("field")) fail(ErrorCode::ConfigError, "config needs a field");
    const FieldDescriptor d = io::field_from_json(config.at("field"));
    if (d.kind() == FieldDescriptor::Kind::Rational) {
      const Field<Rational> f;
      return run(command, parse_context(f, config, common));
    }
    const Field<ModP> f(d);
    return run(command, parse_context(f, config, common));
  } catch (const Error& e) {
    return Outcome{exit_for(e), json{{"error", error_json(e)}}};
  } catch (const json::exception& e) {
    return Outcome{kConfigError, json{{"error", {{"code", "ConfigError"}, {"message", e.what()}}}}};
  }
}

std::string render_text(const json& report) {
  std::ostringstream os;
  render(os, report, 0);
  return os.str();
}

}  // namespace ssf::cli
