/*
   Copyright 2026 The tricox Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "tricox/tricox.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <unordered_set>

#include "json_io.hpp"
#include "tricox/render.hpp"
#include "tricox/suites.hpp"

struct tricox_instance {
  explicit tricox_instance(tricox::InstanceConfig const& c) : inst(c) {}
  tricox::Instance inst;
};

namespace {

  using namespace tricox;

  thread_local std::string last_error;

  char* dup(std::string const& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p != nullptr) {
      std::memcpy(p, s.c_str(), s.size() + 1);
    }
    return p;
  }

  void put(char** out, std::string const& s) {
    if (out != nullptr) {
      *out = dup(s);
    }
  }

  std::string fmt(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
  }

  InstanceConfig parse_config(char const* text) {
    InstanceConfig c;
    if (text == nullptr || *text == '\0') {
      return c;
    }
    json j;
    try {
      j = json::parse(text);
    } catch (json::exception const& e) {
      invalid_input(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
      invalid_input("config must be a JSON object");
    }
    for (auto const& [key, v] : j.items()) {
      try {
        if (key == "labels") {
          c.labels = v.get<std::string>();
        } else if (key == "generator_order") {
          c.generator_order = v.get<std::string>();
        } else if (key == "ball_radius") {
          c.ball_radius = v.get<std::size_t>();
        } else if (key == "window") {
          c.window = v.get<long>();
        } else if (key == "float_digits") {
          c.float_digits = v.get<int>();
        } else if (key == "seed") {
          c.seed = v.get<std::uint64_t>();
        } else {
          invalid_input("unknown config key '" + key + "'");
        }
      } catch (json::exception const&) {
        invalid_input("config key '" + key + "' has the wrong type");
      }
    }
    return c;
  }

  json words(Instance const& inst, std::vector<GroupElement> const& gs) {
    json a = json::array();
    for (auto const& g : gs) {
      a.push_back(inst.word(g));
    }
    return a;
  }

  json vec_json(Vec3 const& v) {
    return json::array({to_json(v.x[0]), to_json(v.x[1]), to_json(v.x[2])});
  }

  json element_json(Instance const& inst, IntervalElement const& u) {
    return json{{"word", inst.word(u.g)},
                {"rank", u.rank},
                {"kind", to_string(u.kind)},
                {"matrix", to_json(u.g.matrix())}};
  }

  IntervalElement member_of(Instance const& inst, char const* word) {
    if (word == nullptr) {
      invalid_input("missing operand");
    }
    auto u = inst.lattice().in_interval(inst.element(word));
    if (!u) {
      invalid_input(std::string("'") + word + "' is not a member of [1,w]");
    }
    return *u;
  }

  // Runs body, converting exceptions into status codes and error JSON.
  template <class F>
  int guarded(InstanceConfig const* config, char** out, F&& body) {
    last_error.clear();
    Status      st = Status::ok;
    std::string message;
    try {
      return body();
    } catch (Error const& e) {
      st      = e.status();
      message = e.what();
    } catch (std::bad_alloc const&) {
      st      = Status::cap_exceeded;
      message = "out of memory";
    } catch (std::exception const& e) {
      st      = Status::internal;
      message = e.what();
    }
    last_error = message;
    json j;
    if (config != nullptr) {
      j["config"] = to_json(*config);
    }
    j["status"] = status_name(st);
    j["error"]  = message;
    put(out, j.dump(2));
    return static_cast<int>(st);
  }

  json head(Instance const& inst) {
    return json{{"config", to_json(inst.config())}};
  }

  int need_instance(tricox_instance const* h, char** out) {
    if (h != nullptr) {
      return TRICOX_OK;
    }
    last_error = "null instance";
    put(out, json{{"status", "invalid_input"}, {"error", last_error}}.dump(2));
    return TRICOX_INVALID_INPUT;
  }

}  // namespace

extern "C" {

char const* tricox_version(void) {
  return "1.0.0";
}

char const* tricox_last_error(void) {
  return last_error.c_str();
}

void tricox_string_free(char* s) {
  std::free(s);
}

int tricox_instance_create(char const* config_json, tricox_instance** out) {
  if (out == nullptr) {
    last_error = "null output handle";
    return TRICOX_INVALID_INPUT;
  }
  *out = nullptr;
  return guarded(nullptr, nullptr, [&] {
    *out = new tricox_instance(parse_config(config_json));
    return TRICOX_OK;
  });
}

void tricox_instance_destroy(tricox_instance* inst) {
  delete inst;
}

int tricox_config(tricox_instance const* h, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  put(out, to_json(h->inst.config()).dump(2));
  return TRICOX_OK;
}

int tricox_info(tricox_instance const* h, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    CoxeterSystem const& W = inst.system();
    FieldSpec const*     f = W.field();
    Axis const&          A = inst.axis();
    int                  digits = inst.config().float_digits;
    json                 j      = head(inst);
    j["type"]               = W.spec().kind();
    j["field"]              = {{"L", f->L()},
                               {"degree", f->degree()},
                               {"generator", "2cos(pi/" + std::to_string(f->L()) + ")"},
                               {"generator_value", fmt(f->gamma_double(), digits)},
                               {"minimal_polynomial", f->minpoly_string()}};
    j["gram"]               = to_json(W.gram());
    auto cls                = W.classify(A.w());
    j["coxeter_element"]    = {{"word", inst.config().generator_order},
                               {"kind", to_string(cls.kind)},
                               {"matrix", to_json(A.w().matrix())},
                               {"axial_factorization",
                                words(inst, inst.lattice().increasing_factorization(
                                                inst.lattice().top()))},
                               {"segment_crossings", words(inst, A.segment_crossings())},
                               {"base_is_fundamental", A.base_is_fundamental()}};
    put(out, j.dump(2));
    return TRICOX_OK;
  });
}

int tricox_word_problem(tricox_instance const* h, char const* lhs, char const* rhs, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    if (lhs == nullptr || rhs == nullptr) {
      invalid_input("missing word");
    }
    bool equal = inst.garside().word_problem(inst.to_internal(lhs), inst.to_internal(rhs));
    json j     = head(inst);
    j["lhs"]   = lhs;
    j["rhs"]   = rhs;
    j["equal"] = equal;
    put(out, j.dump(2));
    return TRICOX_OK;
  });
}

int tricox_normal_form(tricox_instance const* h, char const* word, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    if (word == nullptr) {
      invalid_input("missing word");
    }
    NormalForm nf = inst.garside().from_word(inst.to_internal(word));
    json       fs = json::array();
    for (auto const& x : nf.factors) {
      fs.push_back(element_json(inst, x));
    }
    json j           = head(inst);
    j["word"]        = word;
    j["delta_power"] = nf.delta;
    j["factors"]     = fs;
    put(out, j.dump(2));
    return TRICOX_OK;
  });
}

namespace {

  int lattice_op(tricox_instance const* h, char const* u, char const* v, char** out, bool join) {
    if (int rc = need_instance(h, out)) {
      return rc;
    }
    Instance const& inst = h->inst;
    return guarded(&inst.config(), out, [&] {
      IntervalElement a = member_of(inst, u), b = member_of(inst, v);
      IntervalElement r = join ? inst.lattice().join(a, b) : inst.lattice().meet(a, b);
      json            j = head(inst);
      j["operation"]    = join ? "join" : "meet";
      j["operands"]     = json::array({element_json(inst, a), element_json(inst, b)});
      j["result"]       = element_json(inst, r);
      put(out, j.dump(2));
      return TRICOX_OK;
    });
  }

}  // namespace

int tricox_join(tricox_instance const* h, char const* u, char const* v, char** out) {
  return lattice_op(h, u, v, out, true);
}

int tricox_meet(tricox_instance const* h, char const* u, char const* v, char** out) {
  return lattice_op(h, u, v, out, false);
}

int tricox_reflections(tricox_instance const* h, unsigned radius, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    CoxeterSystem const&      W    = inst.system();
    Axis const&               A    = inst.axis();
    auto                      ball = W.enumerate_ball(radius);
    std::vector<GroupElement> rs;
    for (auto i : ball.reflections()) {
      rs.push_back(ball.entries()[i].element);
    }
    std::sort(rs.begin(), rs.end(), [&](GroupElement const& x, GroupElement const& y) {
      return A.precedes(x, y);
    });
    json list = json::array();
    for (auto const& r : rs) {
      list.push_back({{"word", inst.word(r)},
                      {"tag", A.is_vertical(r) ? "vertical" : "horizontal"},
                      {"member", inst.lattice().in_interval(r).has_value()},
                      {"pole", vec_json(W.pole(r))}});
    }
    json j           = head(inst);
    j["radius"]      = radius;
    j["count"]       = rs.size();
    j["reflections"] = list;
    put(out, j.dump(2));
    return TRICOX_OK;
  });
}

int tricox_components(tricox_instance const* h, long window, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    if (window < 0) {
      invalid_input("window must be nonnegative");
    }
    if (window > max_window()) {
      cap_exceeded("window " + std::to_string(window) + " exceeds the cap "
                   + std::to_string(max_window()));
    }
    Morse const& M = inst.morse();
    Truncation   T = M.truncate(M.ball_seeds(inst.config().ball_radius), window);
    std::vector<std::string>                     order;
    std::unordered_map<std::string, std::size_t> cells;
    for (auto const& c : T.cells) {
      Component const& comp = M.place(c).comp;
      if (cells.count(comp.key) == 0) {
        order.push_back(comp.key);
      }
      ++cells[comp.key];
    }
    std::unordered_map<std::string, Component> by_key;
    for (auto const& c : T.cells) {
      Component const& comp = M.place(c).comp;
      by_key.emplace(comp.key, comp);
    }
    json list = json::array();
    for (auto const& key : order) {
      Component const& comp = by_key.at(key);
      Cell             base = M.cell_at(comp, 0);
      Membership       mem  = M.membership(base, window);
      json             bw   = json::array();
      for (auto const& x : comp.base) {
        bw.push_back(inst.word(x.g));
      }
      json e{{"base_cell", inst.to_external(M.to_string(base))},
             {"dimension", comp.d},
             {"sequence", bw},
             {"type", to_string(comp.type)},
             {"exceptional", comp.exceptional},
             {"in_K2", comp.in_K2()},
             {"in_K1", mem.k1 == Tri::yes ? json(true) : mem.k1 == Tri::no ? json(false) : json()},
             {"base_in_X2", mem.x2},
             {"cells_in_window", cells[key]}};
      if (!comp.in_K2()) {
        e["critical_cell"] =
            inst.to_external(M.to_string(M.cell_at(comp, M.critical_position(comp))));
      }
      list.push_back(e);
    }
    json j          = head(inst);
    j["window"]     = window;
    j["cells"]      = T.cells.size();
    j["count"]      = order.size();
    j["components"] = list;
    put(out, j.dump(2));
    return TRICOX_OK;
  });
}

int tricox_verify(tricox_instance const* h, char const* suite, char** out) {
  if (int rc = need_instance(h, out)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out, [&] {
    if (suite == nullptr) {
      invalid_input("missing suite name");
    }
    SuiteReport r = run_suite(inst, suite);
    put(out, r.to_json(inst.config()));
    if (!r.passed()) {
      for (auto const& i : r.items) {
        if (!i.passed) {
          last_error = suite + std::string(" / ") + i.name + ": " + i.detail;
          break;
        }
      }
    }
    return static_cast<int>(r.status());
  });
}

int tricox_render(tricox_instance const* h, char const* model, char** out_svg, char** out_json) {
  if (out_svg != nullptr) {
    *out_svg = nullptr;
  }
  if (int rc = need_instance(h, out_json)) {
    return rc;
  }
  Instance const& inst = h->inst;
  return guarded(&inst.config(), out_json, [&] {
    RenderOptions opts;
    opts.model  = parse_model(model == nullptr ? "poincare" : model);
    opts.window = inst.config().window;
    opts.digits = inst.config().float_digits;
    Rendering r = render(inst.axis(), opts);
    json      j = head(inst);
    j["model"]        = opts.model == DiskModel::klein ? "klein" : "poincare";
    j["klein_radius"] = opts.radius.get_str();
    j["lines"]        = r.lines;
    j["chambers"]     = r.chambers;
    j["axial_vertices"] = r.vertices;
    j["orbit_counts"] = r.orbit_counts;
    put(out_svg, r.svg);
    put(out_json, j.dump(2));
    return TRICOX_OK;
  });
}

}  // extern "C"
