#pragma once

#include "tilt.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace fanolat {

struct LabeledLocus {
    std::string label;
    WallLocus locus;
};

struct PlotWindow {
    Rational beta_min = -2, beta_max = 1;
    Rational alpha_max = 2;
    long long denominator = 200;  // samples at beta = k / denominator
};

struct PlotSample {
    std::string label;
    double beta, alpha;
};

// Presentation only: alpha = sqrt(alpha^2) is taken in floating point after the exact alpha^2.
inline std::vector<PlotSample> sample_loci(const std::vector<LabeledLocus>& loci, const PlotWindow& win) {
    std::vector<PlotSample> out;
    const long long n = win.denominator;
    const long long k0 = (win.beta_min * Rational(n)).ceil().get_si();
    const long long k1 = (win.beta_max * Rational(n)).floor().get_si();
    for (auto& l : loci) {
        if (auto* c = std::get_if<WallCircle>(&l.locus)) {
            for (long long k = k0; k <= k1; ++k) {
                Rational b(k, n);
                Rational a2 = c->radius_sq - (b - c->center) * (b - c->center);
                if (a2.sign() <= 0) continue;
                out.push_back({l.label, b.to_double(), std::sqrt(a2.to_double())});
            }
        } else if (auto* v = std::get_if<WallLine>(&l.locus)) {
            if (v->beta < win.beta_min || v->beta > win.beta_max) continue;
            const long long top = (win.alpha_max * Rational(n)).floor().get_si();
            for (long long k = 1; k <= top; ++k) out.push_back({l.label, v->beta.to_double(), double(k) / double(n)});
        }
    }
    return out;
}

inline std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

inline std::string samples_csv(const std::vector<PlotSample>& s) {
    std::string out = "label,beta,alpha\n";
    for (auto& p : s) {
        std::string label = p.label;
        if (label.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char ch : label) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            label = q + "\"";
        }
        out += label + "," + fmt6(p.beta) + "," + fmt6(p.alpha) + "\n";
    }
    return out;
}

inline std::string samples_svg(const std::vector<PlotSample>& s, const PlotWindow& win) {
    const double W = 800, Hh = 400, pad = 30;
    const double b0 = win.beta_min.to_double(), b1 = win.beta_max.to_double(), a1 = win.alpha_max.to_double();
    auto X = [&](double b) { return pad + (b - b0) / (b1 - b0) * (W - 2 * pad); };
    auto Y = [&](double a) { return Hh - pad - a / a1 * (Hh - 2 * pad); };
    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\" viewBox=\"0 0 " << W
      << " " << Hh << "\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<line x1=\"" << fmt6(X(b0)) << "\" y1=\"" << fmt6(Y(0)) << "\" x2=\"" << fmt6(X(b1)) << "\" y2=\""
      << fmt6(Y(0)) << "\" stroke=\"black\"/>\n";
    if (b0 < 0 && b1 > 0)
        o << "<line x1=\"" << fmt6(X(0)) << "\" y1=\"" << fmt6(Y(0)) << "\" x2=\"" << fmt6(X(0)) << "\" y2=\""
          << fmt6(Y(a1)) << "\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
    std::size_t i = 0;
    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    int color = 0;
    while (i < s.size()) {
        std::size_t j = i;
        while (j < s.size() && s[j].label == s[i].label) ++j;
        o << "<polyline fill=\"none\" stroke=\"" << colors[color++ % 6] << "\" points=\"";
        for (std::size_t k = i; k < j; ++k) {
            if (s[k].alpha > a1) continue;
            o << fmt6(X(s[k].beta)) << "," << fmt6(Y(s[k].alpha)) << " ";
        }
        o << "\"><title>" << s[i].label << "</title></polyline>\n";
        i = j;
    }
    o << "<text x=\"" << W - pad << "\" y=\"" << Hh - 8 << "\" text-anchor=\"end\" font-size=\"12\">beta</text>\n";
    o << "<text x=\"8\" y=\"" << pad - 8 << "\" font-size=\"12\">alpha</text>\n";
    o << "</svg>\n";
    return o.str();
}

}  // namespace fanolat
