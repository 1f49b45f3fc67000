#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linecong/bde.hpp"
#include "linecong/contour.hpp"
#include "linecong/kummer.hpp"
#include "linecong/scene.hpp"
#include "linecong/verify.hpp"

namespace linecong {

inline constexpr int kReportSchema = 1;

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);

/// JSON report of every form coefficient at q. Matrices are row-major.
std::string forms_report(const CongruenceScene& scene, const Point2& q);

std::string verify_report_json(const VerifyReport& report);

struct TracedCurve {
  int curve_id = 0;
  IntegralCurve curve;
};

/// Columns: curve_id,kind,branch,t,u1,u2,x,y,z (the last three lift through x).
std::string curves_csv(const CongruenceScene& scene, BdeKind kind, const std::vector<TracedCurve>& curves);

struct CurveFamily {
  std::string family;  // e.g. "lambda", "delta", "discriminant_principal"
  std::vector<Polyline> curves;
};

/// Columns: family,curve_id,u1,u2.
std::string contours_csv(const std::vector<CurveFamily>& families);

/// Vertices and quad faces of the mesh; the striction line, when given, is
/// appended as one `l` record.
std::string mesh_obj(const CongruenceMesh& mesh, const std::optional<StrictionCurve>& striction);

/// Columns: t,u1,u2,k,x,y,z,property_residual.
std::string striction_csv(const StrictionCurve& s);

}  // namespace linecong
