#include "zalcman/zalcman.h"

#include <cstring>
#include <string>

#include "core/errors.hpp"
#include "core/extremal.hpp"
#include "core/optimize.hpp"
#include "core/params.hpp"
#include "core/surface.hpp"
#include "core/verify.hpp"

namespace {

thread_local std::string g_last_error;

zal_status fail(zal_status status, const char* what) {
  g_last_error = what;
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
zal_status guarded(Fn&& fn) {
  try {
    fn();
    return ZAL_OK;
  } catch (const zalcman::window_error& e) {
    return fail(ZAL_ERR_WINDOW, e.what());
  } catch (const zalcman::domain_error& e) {
    return fail(ZAL_ERR_DOMAIN, e.what());
  } catch (const zalcman::argument_error& e) {
    return fail(ZAL_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ZAL_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ZAL_ERR_INTERNAL, "unknown error");
  }
}

void copy_string(char* dst, size_t cap, const std::string& src) {
  if (!dst || cap == 0) return;
  const size_t len = std::min(cap - 1, src.size());
  std::memcpy(dst, src.data(), len);
  dst[len] = '\0';
}

}  // namespace

struct zal_verify_report {
  zalcman::VerificationReport body;
  std::string text;
};

extern "C" {

const char* zal_status_name(zal_status status) {
  switch (status) {
    case ZAL_OK: return "ok";
    case ZAL_ERR_DOMAIN: return "domain_error";
    case ZAL_ERR_WINDOW: return "window_error";
    case ZAL_ERR_ARGUMENT: return "argument_error";
    case ZAL_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* zal_last_error(void) { return g_last_error.c_str(); }

const char* zal_version(void) { return "1.0.0"; }

zal_status zal_compute_thresholds(int n, zal_thresholds* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::RegimeThresholds t = zalcman::thresholds(n);
    out->lambda_small_max = t.lambda_small_max;
    out->lambda_large_min = t.lambda_large_min;
    out->aux_a = t.aux_a;
    out->aux_b_nminus = t.aux_b_nminus;
    out->aux_b_nplus = t.aux_b_nplus;
    out->aux_b = t.aux_b;
    out->t_6n2 = t.t_6n2;
    out->t_5n1 = t.t_5n1;
    out->t_4n2 = t.t_4n2;
    out->t_8n = t.t_8n;
    out->t_small_mirror = t.t_small_mirror;
  });
}

zal_status zal_classify(int n, double lambda, zal_regime* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    switch (zalcman::classify(zalcman::make_params(n, lambda))) {
      case zalcman::Regime::SmallLambda: *out = ZAL_REGIME_SMALL; break;
      case zalcman::Regime::MiddleLambda: *out = ZAL_REGIME_MIDDLE; break;
      case zalcman::Regime::LargeLambda: *out = ZAL_REGIME_LARGE; break;
    }
  });
}

const char* zal_regime_name(zal_regime regime) {
  switch (regime) {
    case ZAL_REGIME_SMALL: return "SmallLambda";
    case ZAL_REGIME_MIDDLE: return "MiddleLambda";
    case ZAL_REGIME_LARGE: return "LargeLambda";
  }
  return "unknown";
}

zal_status zal_theorem_bound(int n, double lambda, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded(
      [&] { *out = zalcman::theorem_bound(zalcman::make_params(n, lambda)); });
}

zal_status zal_check_chain(int n, int* passed, double* margin) {
  if (!passed || !margin) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::CheckRecord r = zalcman::check_chain(n);
    *passed = r.passed ? 1 : 0;
    *margin = r.margin;
  });
}

zal_status zal_extreme_coeff(double s, double t, int k, double* re, double* im) {
  if (!re || !im) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const auto a = zalcman::extreme_coeff(zalcman::make_extreme_point(s, t), k);
    *re = a.real();
    *im = a.imag();
  });
}

zal_status zal_functional_at(int n, double lambda, double s, double t,
                             zal_functional_value* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::FunctionalValue f =
        zalcman::functional_at(zalcman::make_params(n, lambda), s, t);
    out->z_re = f.z_complex.real();
    out->z_im = f.z_complex.imag();
    out->z_modulus = f.z_modulus;
    out->j_value = f.j_value;
  });
}

zal_status zal_sweep_extreme_points(int n, double lambda, int grid,
                                    zal_sweep_result* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::SweepResult r =
        zalcman::sweep_extreme_points(zalcman::make_params(n, lambda), grid);
    out->max_value = r.max_value;
    out->s = r.argmax.s;
    out->t = r.argmax.t;
  });
}

zal_status zal_eval_surface_f(int n, double lambda, double u, double v, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded(
      [&] { *out = zalcman::eval_F(zalcman::make_params(n, lambda), u, v); });
}

zal_status zal_eval_surface_g(int n, double lambda, double u, double v, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded(
      [&] { *out = zalcman::eval_G(zalcman::make_params(n, lambda), u, v); });
}

zal_status zal_gradient_f(int n, double lambda, double u, double v, double* du,
                          double* dv) {
  if (!du || !dv) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::Gradient g =
        zalcman::gradient_F(zalcman::make_params(n, lambda), u, v);
    *du = g.du;
    *dv = g.dv;
  });
}

zal_status zal_discriminant(int n, double lambda, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded(
      [&] { *out = zalcman::discriminant(zalcman::make_params(n, lambda)); });
}

zal_status zal_cubic_a(int n, double lambda, double* expanded, double* factored) {
  if (!expanded || !factored) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::CubicA a = zalcman::cubic_A(zalcman::make_params(n, lambda));
    *expanded = a.expanded;
    *factored = a.factored;
  });
}

zal_status zal_boundary_max_f(int n, double lambda, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded(
      [&] { *out = zalcman::boundary_max_F(zalcman::make_params(n, lambda)); });
}

zal_status zal_interior_critical_value(int n, double lambda, double* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    *out = zalcman::F_at_interior_critical(zalcman::make_params(n, lambda));
  });
}

zal_status zal_critical_points(int n, double lambda, zal_critical_point* out,
                               int capacity, int* count, char* note_buf,
                               size_t note_cap) {
  if (!out || !count || capacity < 1)
    return fail(ZAL_ERR_ARGUMENT, "need an output buffer with capacity >= 1");
  return guarded([&] {
    const zalcman::CriticalPointSet set =
        zalcman::critical_points(zalcman::make_params(n, lambda));
    *count = static_cast<int>(set.points.size());
    const int m = std::min(capacity, *count);
    for (int i = 0; i < m; ++i) {
      const zalcman::CriticalPoint& cp = set.points[i];
      out[i].u = cp.u;
      out[i].v = cp.v;
      out[i].f_value = cp.f_value;
      out[i].gradient_residual = cp.gradient_residual;
      out[i].is_interior_pair = cp.kind == zalcman::CriticalKind::InteriorPair ? 1 : 0;
    }
    copy_string(note_buf, note_cap, set.regime_note);
  });
}

zal_status zal_boundary_restrictions(int n, double lambda,
                                     zal_edge_restriction* out) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::BoundaryRestrictions br =
        zalcman::boundary_restrictions(zalcman::make_params(n, lambda));
    const zalcman::EdgeRestriction* edges[4] = {&br.f_on_u_edge, &br.f_on_v_edge,
                                                &br.g_on_u_edge, &br.g_on_v_edge};
    const char* labels[4] = {"Psi", "Phi", "psi", "phi"};
    for (int i = 0; i < 4; ++i) {
      copy_string(out[i].label, sizeof out[i].label, labels[i]);
      out[i].c2 = edges[i]->c2;
      out[i].c1 = edges[i]->c1;
      out[i].c0 = edges[i]->c0;
      out[i].stationary = edges[i]->stationary;
      out[i].stationary_interior = edges[i]->stationary_interior ? 1 : 0;
      out[i].max_value = edges[i]->max_value;
      out[i].argmax = edges[i]->argmax;
    }
  });
}

namespace {

zal_status grid_max_impl(int n, double lambda, int resolution, int rounds,
                         double zoom, zal_max_result* out, bool use_f) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::ProblemParams p = zalcman::make_params(n, lambda);
    const zalcman::GridSpec spec{resolution, rounds, zoom};
    const zalcman::MaxResult r = zalcman::grid_max(
        [&](double u, double v) {
          return use_f ? zalcman::eval_F(p, u, v) : zalcman::eval_G(p, u, v);
        },
        {-1.0, 1.0, -1.0, 1.0}, spec);
    out->value = r.value;
    out->x = r.x;
    out->y = r.y;
    out->certified_gap = r.certified_gap;
  });
}

zal_status edge_max_impl(int n, double lambda, zal_edge edge, int resolution,
                         int rounds, double zoom, zal_max_result* out, bool use_f) {
  if (!out) return fail(ZAL_ERR_ARGUMENT, "null output pointer");
  return guarded([&] {
    const zalcman::ProblemParams p = zalcman::make_params(n, lambda);
    const zalcman::GridSpec spec{resolution, rounds, zoom};
    const auto surface = [&](double u, double v) {
      return use_f ? zalcman::eval_F(p, u, v) : zalcman::eval_G(p, u, v);
    };
    auto fn = [&](double x) {
      switch (edge) {
        case ZAL_EDGE_U_PLUS: return surface(1.0, x);
        case ZAL_EDGE_U_MINUS: return surface(-1.0, x);
        case ZAL_EDGE_V_PLUS: return surface(x, 1.0);
        case ZAL_EDGE_V_MINUS: return surface(x, -1.0);
      }
      throw zalcman::argument_error("unknown edge");
    };
    const zalcman::EdgeMaxResult r = zalcman::edge_max(fn, -1.0, 1.0, spec);
    out->value = r.value;
    out->x = r.x;
    out->y = 0.0;
    out->certified_gap = r.certified_gap;
  });
}

}  // namespace

zal_status zal_grid_max_f(int n, double lambda, int resolution, int rounds,
                          double zoom, zal_max_result* out) {
  return grid_max_impl(n, lambda, resolution, rounds, zoom, out, true);
}

zal_status zal_grid_max_g(int n, double lambda, int resolution, int rounds,
                          double zoom, zal_max_result* out) {
  return grid_max_impl(n, lambda, resolution, rounds, zoom, out, false);
}

zal_status zal_edge_max_f(int n, double lambda, zal_edge edge, int resolution,
                          int rounds, double zoom, zal_max_result* out) {
  return edge_max_impl(n, lambda, edge, resolution, rounds, zoom, out, true);
}

zal_status zal_edge_max_g(int n, double lambda, zal_edge edge, int resolution,
                          int rounds, double zoom, zal_max_result* out) {
  return edge_max_impl(n, lambda, edge, resolution, rounds, zoom, out, false);
}

void zal_verify_config_default(zal_verify_config* out) {
  if (!out) return;
  out->n_min = 3;
  out->n_max = 10;
  out->lambda_samples = 15;
  out->grid = 512;
  out->seed = 20260808ULL;
}

zal_status zal_verify_run(const zal_verify_config* config, zal_verify_report** out) {
  if (!config || !out) return fail(ZAL_ERR_ARGUMENT, "null pointer");
  *out = nullptr;
  return guarded([&] {
    zalcman::VerifyConfig cfg;
    cfg.n_min = config->n_min;
    cfg.n_max = config->n_max;
    cfg.lambda_samples = config->lambda_samples;
    cfg.grid = config->grid;
    cfg.seed = config->seed;
    auto* rep = new zal_verify_report;
    rep->body = zalcman::run_full(cfg);
    rep->text = rep->body.render_text();
    *out = rep;
  });
}

void zal_report_free(zal_verify_report* report) { delete report; }

int zal_report_record_count(const zal_verify_report* report) {
  return report ? static_cast<int>(report->body.records.size()) : 0;
}

int zal_report_failure_count(const zal_verify_report* report) {
  return report ? report->body.failure_count() : 0;
}

zal_status zal_report_record(const zal_verify_report* report, int index,
                             zal_check_record* out) {
  if (!report || !out) return fail(ZAL_ERR_ARGUMENT, "null pointer");
  if (index < 0 || index >= zal_report_record_count(report))
    return fail(ZAL_ERR_ARGUMENT, "record index out of range");
  const zalcman::CheckRecord& r = report->body.records[index];
  copy_string(out->check_id, sizeof out->check_id, r.check_id);
  out->n = r.n;
  out->lambda = r.lambda;
  out->passed = r.passed ? 1 : 0;
  out->margin = r.margin;
  return ZAL_OK;
}

int zal_report_detail_count(const zal_verify_report* report, int index) {
  if (!report || index < 0 || index >= zal_report_record_count(report)) return 0;
  return static_cast<int>(report->body.records[index].details.size());
}

zal_status zal_report_detail(const zal_verify_report* report, int index,
                             int detail_index, const char** key, double* value) {
  if (!report || !key || !value) return fail(ZAL_ERR_ARGUMENT, "null pointer");
  if (index < 0 || index >= zal_report_record_count(report))
    return fail(ZAL_ERR_ARGUMENT, "record index out of range");
  const auto& details = report->body.records[index].details;
  if (detail_index < 0 || detail_index >= static_cast<int>(details.size()))
    return fail(ZAL_ERR_ARGUMENT, "detail index out of range");
  *key = details[detail_index].first.c_str();
  *value = details[detail_index].second;
  return ZAL_OK;
}

int zal_report_flag_count(const zal_verify_report* report) {
  return report ? static_cast<int>(report->body.flags.size()) : 0;
}

const char* zal_report_flag(const zal_verify_report* report, int index) {
  if (!report || index < 0 || index >= zal_report_flag_count(report)) return "";
  return report->body.flags[index].c_str();
}

const char* zal_report_text(const zal_verify_report* report) {
  return report ? report->text.c_str() : "";
}

}  // extern "C"
