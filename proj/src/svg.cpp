#include "orthospeed/svg.hpp"

#include <cstdio>

#include "orthospeed/csv_io.hpp"

namespace orthospeed {

namespace {

constexpr double kWidth = 960.0;
constexpr double kHeight = 540.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 45.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<TracePoint>& trace,
                       const std::vector<OrthogonalityEvent>& events) {
    if (trace.empty()) throw domain_error("cannot plot an empty trace");

    const double t0 = trace.front().t;
    const double t1 = trace.back().t;
    const double span = t1 > t0 ? t1 - t0 : 1.0;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto x_of = [&](double t) { return kLeft + (t - t0) / span * plot_w; };
    auto y_of = [&](double v) { return kTop + (1.0 - v) * plot_h; };

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) +
         "\" height=\"" + num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) +
         " " + num(kHeight) + "\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // frame and gridlines at 0, 0.5, 1
    for (double v : {0.0, 0.5, 1.0}) {
        s += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y_of(v)) +
             "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(y_of(v)) +
             "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        s += "<text x=\"" + num(kLeft - 8.0) + "\" y=\"" + num(y_of(v) + 4.0) +
             "\" text-anchor=\"end\" font-size=\"12\" fill=\"#333333\">" +
             num(v) + "</text>\n";
    }
    for (int k = 0; k <= 4; ++k) {
        const double t = t0 + span * k / 4.0;
        s += "<text x=\"" + num(x_of(t)) + "\" y=\"" +
             num(kHeight - kBottom + 18.0) +
             "\" text-anchor=\"middle\" font-size=\"12\" fill=\"#333333\">" +
             num(t) + "</text>\n";
    }
    s += "<text x=\"" + num(kLeft + plot_w / 2.0) + "\" y=\"" +
         num(kHeight - 8.0) +
         "\" text-anchor=\"middle\" font-size=\"13\" fill=\"#333333\">scaled "
         "time</text>\n";

    static const char* kColors[2][2] = {{"#1f77b4", "#d62728"},
                                        {"#2ca02c", "#9467bd"}};
    static const char* kNames[2][2] = {{"sp11", "sp12"}, {"sp21", "sp22"}};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            s += "<polyline fill=\"none\" stroke=\"";
            s += kColors[i][j];
            s += "\" stroke-width=\"1.2\" points=\"";
            for (const TracePoint& p : trace) {
                s += num(x_of(p.t));
                s += ',';
                s += num(y_of(p.sp[i][j]));
                s += ' ';
            }
            s += "\"/>\n";
            // legend swatch
            const double lx = kLeft + 12.0 + (i * 2 + j) * 70.0;
            s += "<rect x=\"" + num(lx) + "\" y=\"" + num(kTop + 6.0) +
                 "\" width=\"14\" height=\"4\" fill=\"" +
                 std::string(kColors[i][j]) + "\"/>\n";
            s += "<text x=\"" + num(lx + 18.0) + "\" y=\"" + num(kTop + 12.0) +
                 "\" font-size=\"12\" fill=\"#333333\">" + kNames[i][j] +
                 "</text>\n";
        }
    }

    for (const OrthogonalityEvent& e : events) {
        s += "<circle cx=\"" + num(x_of(e.t_event)) + "\" cy=\"" +
             num(y_of(e.residual)) + "\" r=\"3\" fill=\"none\" stroke=\"" +
             kColors[e.i - 1][e.j - 1] + "\" stroke-width=\"1.5\"/>\n";
    }

    s += "</svg>\n";
    return s;
}

void emit_svg(const std::vector<TracePoint>& trace,
              const std::vector<OrthogonalityEvent>& events,
              const std::string& path) {
    write_file(path, render_svg(trace, events));
}

}  // namespace orthospeed
