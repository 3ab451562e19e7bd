#include "orthospeed/csv_io.hpp"

#include <cstdio>
#include <fstream>

namespace orthospeed {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string header_comment(const nlohmann::json& echo, const char* what) {
    std::string s = "# orthospeed ";
    s += what;
    s += "\n# config ";
    s += echo.dump();
    s += "\n";
    return s;
}

}  // namespace

std::string render_trace_csv(const nlohmann::json& echo,
                             const std::vector<TracePoint>& trace,
                             bool with_dev) {
    std::string out = header_comment(echo, "trace");
    out += "t,rho11,rho22,re_rho12,im_rho12,lambda1,lambda2,"
           "sp11,sp12,sp21,sp22,degenerate";
    if (with_dev) out += ",rho_dev";
    out += "\n";
    for (const TracePoint& p : trace) {
        out += fmt17(p.t);
        out += ',';
        out += fmt17(p.rho.rho11);
        out += ',';
        out += fmt17(p.rho.rho22);
        out += ',';
        out += fmt17(p.rho.rho12.real());
        out += ',';
        out += fmt17(p.rho.rho12.imag());
        out += ',';
        out += fmt17(p.lambda1);
        out += ',';
        out += fmt17(p.lambda2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                out += ',';
                out += fmt17(p.sp[i][j]);
            }
        out += ',';
        out += p.degenerate ? '1' : '0';
        if (with_dev) {
            out += ',';
            out += fmt17(p.rho_dev);
        }
        out += '\n';
    }
    return out;
}

std::string render_events_csv(const nlohmann::json& echo,
                              const std::vector<OrthogonalityEvent>& events) {
    std::string out = header_comment(echo, "events");
    out += "pair_i,pair_j,t_event,residual\n";
    for (const OrthogonalityEvent& e : events) {
        out += std::to_string(e.i);
        out += ',';
        out += std::to_string(e.j);
        out += ',';
        out += fmt17(e.t_event);
        out += ',';
        out += fmt17(e.residual);
        out += '\n';
    }
    return out;
}

std::string render_sweep_csv(const nlohmann::json& echo, const std::string& axis,
                             const std::vector<SweepRow>& rows) {
    std::string out = header_comment(echo, "sweep");
    out += "axis,value,total_events,count_11,count_12,count_21,count_22,"
           "first_orthogonality_time,speed\n";
    for (const SweepRow& r : rows) {
        out += axis;
        out += ',';
        out += fmt17(r.value);
        out += ',';
        out += std::to_string(r.report.total_events);
        out += ',';
        out += std::to_string(r.report.counts[0][0]);
        out += ',';
        out += std::to_string(r.report.counts[0][1]);
        out += ',';
        out += std::to_string(r.report.counts[1][0]);
        out += ',';
        out += std::to_string(r.report.counts[1][1]);
        out += ',';
        if (r.report.first_orthogonality_time)
            out += fmt17(*r.report.first_orthogonality_time);
        out += ',';
        out += fmt17(r.report.speed);
        out += '\n';
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw domain_error("cannot open output file '" + path + "'");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) throw numeric_error("failed writing output file '" + path + "'");
}

}  // namespace orthospeed
