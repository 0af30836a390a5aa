#include "sunbloch/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sunbloch::cli {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string strip_comment(const std::string& line) {
  const auto pos = line.find_first_of("#;");
  return pos == std::string::npos ? line : line.substr(0, pos);
}

double parse_double(const std::string& s, const std::string& where) {
  try {
    size_t consumed = 0;
    const double v = std::stod(s, &consumed);
    if (consumed != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(where + ": cannot parse '" + s + "' as a number");
  }
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Liouville: return "liouville";
    case Method::Rk4: return "rk4";
    case Method::Magnus: return "magnus";
    case Method::WeiNorman: return "weinorman";
    case Method::ClosedForm: return "closedform";
  }
  return "?";
}

KeyValueFile KeyValueFile::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_string(buf.str());
}

KeyValueFile KeyValueFile::parse_string(const std::string& text) {
  KeyValueFile kv;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(strip_comment(line));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError("line " + std::to_string(lineno) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section.empty()) {
        throw ConfigError("line " + std::to_string(lineno) + ": empty section name");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    }
    if (section.empty()) {
      throw ConfigError("line " + std::to_string(lineno) + ": key outside any [section]");
    }
    kv.sections_[section][key] = value;
  }
  return kv;
}

bool KeyValueFile::has(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  return s != sections_.end() && s->second.count(key) > 0;
}

std::string KeyValueFile::get(const std::string& section, const std::string& key) const {
  const auto s = sections_.find(section);
  if (s == sections_.end() || s->second.count(key) == 0) {
    throw ConfigError("missing required key '" + key + "' in section [" + section + "]");
  }
  return s->second.at(key);
}

std::string KeyValueFile::get_or(const std::string& section, const std::string& key,
                                 const std::string& fallback) const {
  return has(section, key) ? get(section, key) : fallback;
}

double KeyValueFile::get_double(const std::string& section, const std::string& key) const {
  return parse_double(get(section, key), "[" + section + "] " + key);
}

double KeyValueFile::get_double_or(const std::string& section, const std::string& key,
                                   double fallback) const {
  return has(section, key) ? get_double(section, key) : fallback;
}

long KeyValueFile::get_long(const std::string& section, const std::string& key) const {
  const std::string s = get(section, key);
  try {
    size_t consumed = 0;
    const long v = std::stol(s, &consumed);
    if (consumed != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + ": cannot parse '" + s + "' as an integer");
  }
}

std::vector<double> KeyValueFile::get_doubles(const std::string& section,
                                              const std::string& key) const {
  std::vector<double> out;
  for (const auto& word : get_words(section, key)) {
    out.push_back(parse_double(word, "[" + section + "] " + key));
  }
  return out;
}

std::vector<std::string> KeyValueFile::get_words(const std::string& section,
                                                 const std::string& key) const {
  std::istringstream in(get(section, key));
  std::vector<std::string> out;
  std::string word;
  while (in >> word) out.push_back(word);
  return out;
}

namespace {

PulseShape parse_shape(const std::string& s) {
  if (s == "constant") return PulseShape::Constant;
  if (s == "gaussian") return PulseShape::Gaussian;
  if (s == "sech") return PulseShape::Sech;
  if (s == "sin2") return PulseShape::SinSquared;
  if (s == "sampled") return PulseShape::Sampled;
  throw ConfigError("unknown pulse shape '" + s +
                    "' (expected constant|gaussian|sech|sin2|sampled)");
}

DetuningMode parse_detuning_mode(const std::string& s) {
  if (s == "constant") return DetuningMode::Constant;
  if (s == "proportional") return DetuningMode::Proportional;
  throw ConfigError("unknown detuning_mode '" + s + "' (expected constant|proportional)");
}

Method parse_method(const std::string& s) {
  if (s == "liouville") return Method::Liouville;
  if (s == "rk4") return Method::Rk4;
  if (s == "magnus") return Method::Magnus;
  if (s == "weinorman") return Method::WeiNorman;
  if (s == "closedform") return Method::ClosedForm;
  throw ConfigError("unknown method '" + s +
                    "' (expected liouville|rk4|magnus|weinorman|closedform)");
}

ComplexMatrix parse_matrix(const KeyValueFile& kv, const std::string& section,
                           const std::string& real_key, const std::string& imag_key, int n) {
  const std::vector<double> re = kv.get_doubles(section, real_key);
  if (static_cast<int>(re.size()) != n * n) {
    throw ConfigError("[" + section + "] " + real_key + ": expected " + std::to_string(n * n) +
                      " row-major entries, got " + std::to_string(re.size()));
  }
  std::vector<double> im(static_cast<size_t>(n) * n, 0.0);
  if (kv.has(section, imag_key)) {
    im = kv.get_doubles(section, imag_key);
    if (static_cast<int>(im.size()) != n * n) {
      throw ConfigError("[" + section + "] " + imag_key + ": expected " +
                        std::to_string(n * n) + " row-major entries, got " +
                        std::to_string(im.size()));
    }
  }
  ComplexMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      m(r, c) = Complex(re[r * n + c], im[r * n + c]);
    }
  }
  return m;
}

}  // namespace

RunConfig load_run_config(const std::string& path) {
  return parse_run_config(KeyValueFile::parse_file(path));
}

RunConfig parse_run_config(const KeyValueFile& kv) {
  RunConfig cfg;

  cfg.n_levels = static_cast<int>(kv.get_long("system", "n_levels"));
  if (cfg.n_levels < 2) throw ConfigError("[system] n_levels must be >= 2");

  const std::string hkind = kv.get_or("system", "hamiltonian", "rwa");
  if (hkind == "rwa") {
    cfg.hamiltonian = HamiltonianKind::Rwa;
    if (cfg.n_levels != 2) {
      throw ConfigError("[system] hamiltonian = rwa requires n_levels = 2");
    }
    cfg.pulse.shape = parse_shape(kv.get_or("system", "shape", "constant"));
    cfg.pulse.omega0 = kv.get_double("system", "omega0");
    cfg.pulse.delta0 = kv.get_double_or("system", "delta0", 0.0);
    cfg.pulse.detuning_mode =
        parse_detuning_mode(kv.get_or("system", "detuning_mode", "constant"));
    cfg.pulse.center = kv.get_double_or("system", "center", 0.0);
    cfg.pulse.width = kv.get_double_or("system", "width", 1.0);
    if (cfg.pulse.width <= 0.0 && cfg.pulse.shape != PulseShape::Constant &&
        cfg.pulse.shape != PulseShape::Sampled) {
      throw ConfigError("[system] width must be positive");
    }
    if (cfg.pulse.shape == PulseShape::Sampled) {
      // samples = t:q t:q ...
      for (const auto& word : kv.get_words("system", "samples")) {
        const auto colon = word.find(':');
        if (colon == std::string::npos) {
          throw ConfigError("[system] samples: expected t:q pairs, got '" + word + "'");
        }
        const double t = parse_double(word.substr(0, colon), "[system] samples");
        const double q = parse_double(word.substr(colon + 1), "[system] samples");
        cfg.pulse.samples.emplace_back(t, q);
      }
    }
  } else if (hkind == "explicit") {
    cfg.hamiltonian = HamiltonianKind::Explicit;
    cfg.explicit_h = parse_matrix(kv, "system", "h_real", "h_imag", cfg.n_levels);
    if (hermiticity_residue(cfg.explicit_h) > tol::kHermiticity) {
      throw ConfigError("[system] explicit Hamiltonian is not Hermitian");
    }
  } else {
    throw ConfigError("[system] hamiltonian must be 'rwa' or 'explicit', got '" + hkind + "'");
  }

  try {
    cfg.grid = TimeGrid(kv.get_double("grid", "t_start"), kv.get_double("grid", "t_end"),
                        kv.get_long("grid", "n_steps"));
  } catch (const ValidationError& e) {
    throw ConfigError(std::string("[grid] ") + e.what());
  }

  std::set<Method> seen;
  for (const auto& word : kv.get_words("run", "methods")) {
    seen.insert(parse_method(word));
  }
  if (seen.empty()) throw ConfigError("[run] methods must not be empty");
  // Canonical emission order, independent of the order in the file.
  for (const Method m : {Method::Liouville, Method::Rk4, Method::Magnus, Method::WeiNorman,
                         Method::ClosedForm}) {
    if (seen.count(m)) cfg.methods.push_back(m);
  }

  const int adim = cfg.n_levels * cfg.n_levels - 1;
  const std::string init = kv.get_or("run", "initial_state", "ground");
  if (init == "ground") {
    cfg.initial_state = InitialStateKind::Ground;
  } else if (init == "coherence") {
    cfg.initial_state = InitialStateKind::Coherence;
    const std::vector<double> v = kv.get_doubles("run", "coherence");
    if (static_cast<int>(v.size()) != adim) {
      throw ConfigError("[run] coherence: expected " + std::to_string(adim) +
                        " entries, got " + std::to_string(v.size()));
    }
    cfg.initial_coherence = Eigen::Map<const RealVector>(v.data(), adim);
  } else if (init == "rho") {
    cfg.initial_state = InitialStateKind::Rho;
    cfg.initial_rho = parse_matrix(kv, "run", "rho_real", "rho_imag", cfg.n_levels);
    try {
      validate_density_matrix(cfg.initial_rho);
    } catch (const Error& e) {
      throw ConfigError(std::string("[run] rho: ") + e.what());
    }
  } else {
    throw ConfigError("[run] initial_state must be ground|coherence|rho, got '" + init + "'");
  }

  cfg.output_directory = kv.get_or("output", "directory", ".");
  cfg.output_prefix = kv.get_or("output", "prefix", "run");

  // Method applicability.
  for (const Method m : cfg.methods) {
    if ((m == Method::WeiNorman || m == Method::ClosedForm) && cfg.n_levels != 2) {
      throw ConfigError(method_name(m) + " requires a two-level system");
    }
    if (m == Method::ClosedForm) {
      if (cfg.hamiltonian != HamiltonianKind::Rwa || !cfg.pulse.proportional()) {
        throw ConfigError("closedform requires the rwa Hamiltonian with proportional detuning");
      }
      if (cfg.initial_state != InitialStateKind::Ground) {
        throw ConfigError("closedform requires initial_state = ground");
      }
    }
    if (m == Method::WeiNorman && cfg.hamiltonian != HamiltonianKind::Rwa) {
      throw ConfigError("weinorman requires the rwa Hamiltonian");
    }
  }
  return cfg;
}

}  // namespace sunbloch::cli
