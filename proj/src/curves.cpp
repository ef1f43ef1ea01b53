#include "nullcone/curves.hpp"

#include <memory>
#include <sstream>

#include "nullcone/classify.hpp"
#include "nullcone/group_orbits.hpp"

namespace nullcone {

namespace {

Scalar get(const ParamMap& p, const std::string& name) {
    auto it = p.find(name);
    if (it == p.end()) throw internal_error("missing curve parameter " + name);
    return it->second;
}

RatFunc C(Field, const Scalar& s) { return RatFunc::constant(s); }
RatFunc E(Field f) { return RatFunc::eps(f); }
RatFunc Epow(Field f, long k) { return RatFunc::eps_power(f, k); }

// Cell shorthand for building a 3x3 rational-function matrix row by row.
EpsMat mat3(Field f, std::initializer_list<RatFunc> cells) {
    if (cells.size() != 9) throw internal_error("mat3 needs nine entries");
    EpsMat m(f, 3);
    std::size_t k = 0;
    for (const RatFunc& c : cells) {
        m.at(k / 3, k % 3) = c;
        ++k;
    }
    return m;
}

EpsMat mat2(Field f, std::initializer_list<RatFunc> cells) {
    if (cells.size() != 4) throw internal_error("mat2 needs four entries");
    EpsMat m(f, 2);
    std::size_t k = 0;
    for (const RatFunc& c : cells) {
        m.at(k / 2, k % 2) = c;
        ++k;
    }
    return m;
}

OrbitLabel Af(const ParamMap& p, Field) {
    return OrbitLabel::A(ExtParam::fin(get(p, "l")), ExtParam::fin(get(p, "m")));
}
OrbitLabel Ai1(const ParamMap& p, Field) {
    return OrbitLabel::A(ExtParam::fin(get(p, "l")), ExtParam::inf());
}
OrbitLabel Ai2(const ParamMap& p, Field) {
    return OrbitLabel::A(ExtParam::inf(), ExtParam::fin(get(p, "l")));
}
OrbitLabel Bf(const ParamMap& p, Field) {
    return OrbitLabel::B(ExtParam::fin(get(p, "l")), ExtParam::fin(get(p, "m")));
}
OrbitLabel Bi(const ParamMap& p, Field) {
    return OrbitLabel::B(ExtParam::inf(), ExtParam::fin(get(p, "l")));
}
OrbitLabel Ef(const ParamMap& p, Field) { return OrbitLabel::E(ExtParam::fin(get(p, "l"))); }
OrbitLabel Ei(const ParamMap&, Field) { return OrbitLabel::E(ExtParam::inf()); }
OrbitLabel Cl(const ParamMap&, Field) { return OrbitLabel::C(); }
OrbitLabel Dl(const ParamMap&, Field) { return OrbitLabel::D(); }
OrbitLabel Ol(const ParamMap&, Field) { return OrbitLabel::O(); }

bool always(const ParamMap&) { return true; }
bool m_nonzero(const ParamMap& p) { return !get(p, "m").is_zero(); }

}  // namespace

std::vector<CurveRow> degeneration_curves() {
    std::vector<CurveRow> rows;
    auto zero = [](Field f) { return RatFunc(f); };
    auto one = [](Field f) { return RatFunc::constant(f.one()); };

    // diag(1, e(l+m), e) + e E12 + l E21 + E32
    rows.push_back(CurveRow{
        "deg-1", "A[l,m] -> D", {"l", "m"}, m_nonzero, Af, Dl,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {one(f), E(f), zero(f),
                            C(f, get(p, "l")), E(f) * C(f, get(p, "l") + get(p, "m")), zero(f),
                            zero(f), one(f), E(f)});
        },
        nullptr});

    // diag(1, e, e) + l E21 + E32
    rows.push_back(CurveRow{
        "deg-2", "A[l,inf] -> D", {"l"}, always, Ai1, Dl,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            C(f, get(p, "l")), E(f), zero(f),
                            zero(f), one(f), E(f)});
        },
        nullptr});

    // diag(0, e l, e) + e E12 + E21 + E32
    rows.push_back(CurveRow{
        "deg-3", "A[inf,l] -> D", {"l"}, always, Ai2, Dl,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {zero(f), E(f), zero(f),
                            one(f), E(f) * C(f, get(p, "l")), zero(f),
                            zero(f), one(f), E(f)});
        },
        nullptr});

    // diag(1, 1 + l/m, -e) + e^-1 m^-1 E21 - m^-1 E32 + e l E23
    rows.push_back(CurveRow{
        "deg-4", "A[l,m] -> C", {"l", "m"}, m_nonzero, Af, Cl,
        [=](const ParamMap& p, Field f) {
            Scalar l = get(p, "l"), m = get(p, "m");
            Scalar minv = m.inverse();
            return mat3(f, {one(f), zero(f), zero(f),
                            Epow(f, -1) * C(f, minv), C(f, f.one() + l * minv), E(f) * C(f, l),
                            zero(f), C(f, -minv), -E(f)});
        },
        nullptr});

    // diag(e, e, e^2) - E21 - e^2 l E23
    rows.push_back(CurveRow{
        "deg-5", "A[l,inf] -> C", {"l"}, always, Ai1, Cl,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {E(f), zero(f), zero(f),
                            -one(f), E(f), -Epow(f, 2) * C(f, get(p, "l")),
                            zero(f), zero(f), Epow(f, 2)});
        },
        nullptr});

    // diag(0, -e l, 0) - e^2 (E12 + E23) + E31 + e E32
    rows.push_back(CurveRow{
        "deg-6", "A[inf,l] -> C", {"l"}, always, Ai2, Cl,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {zero(f), -Epow(f, 2), zero(f),
                            zero(f), -E(f) * C(f, get(p, "l")), -Epow(f, 2),
                            one(f), E(f), zero(f)});
        },
        nullptr});

    // diag(1, 1, e)
    rows.push_back(CurveRow{
        "deg-7", "B[l,m] -> E[l]", {"l", "m"}, always, Bf, Ef,
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), one(f), zero(f),
                            zero(f), zero(f), E(f)});
        },
        nullptr});

    // diag(e, 0, 0) + e E23 - l E31 + E32
    rows.push_back(CurveRow{
        "deg-8", "D -> E[l]", {"l"}, always, Dl, Ef,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {E(f), zero(f), zero(f),
                            zero(f), zero(f), E(f),
                            C(f, -get(p, "l")), one(f), zero(f)});
        },
        nullptr});

    // diag(1, 1, e) + l E23
    rows.push_back(CurveRow{
        "deg-9", "C -> E[l]", {"l"}, always, Cl, Ef,
        [=](const ParamMap& p, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), one(f), C(f, get(p, "l")),
                            zero(f), zero(f), E(f)});
        },
        nullptr});

    // E12 + E23 + e^-1 E31
    rows.push_back(CurveRow{
        "deg-10", "D -> E[inf]", {}, always, Dl, Ei,
        [=](const ParamMap&, Field f) {
            return mat3(f, {zero(f), one(f), zero(f),
                            zero(f), zero(f), one(f),
                            Epow(f, -1), zero(f), zero(f)});
        },
        nullptr});

    // diag(e^-1, 1, e) + e^-1 E23
    rows.push_back(CurveRow{
        "deg-11", "C -> E[inf]", {}, always, Cl, Ei,
        [=](const ParamMap&, Field f) {
            return mat3(f, {Epow(f, -1), zero(f), zero(f),
                            zero(f), one(f), Epow(f, -1),
                            zero(f), zero(f), E(f)});
        },
        nullptr});

    // diag(1, 1, e)
    rows.push_back(CurveRow{
        "deg-12", "B[inf,l] -> E[inf]", {"l"}, always, Bi, Ei,
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), one(f), zero(f),
                            zero(f), zero(f), E(f)});
        },
        nullptr});

    return rows;
}

std::vector<CurveRow> mixing_curves() {
    std::vector<CurveRow> rows;
    auto zero = [](Field f) { return RatFunc(f); };
    auto one = [](Field f) { return RatFunc::constant(f.one()); };
    auto label = [](const char* text) {
        std::string s(text);
        return [s](const ParamMap&, Field f) { return OrbitLabel::parse(s, f); };
    };

    rows.push_back(CurveRow{
        "mix-1", "A[0,inf] -> B[inf,1]", {}, always, label("A[0,inf]"), label("B[inf,1]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            Epow(f, -1), E(f), zero(f),
                            zero(f), one(f), E(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), one(f)});
        }});

    rows.push_back(CurveRow{
        "mix-2", "B[0,1] -> B[0,0]", {}, always, label("B[0,1]"), label("B[0,0]"),
        [=](const ParamMap&, Field f) { return EpsMat::identity(f, 3); },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), E(f)});
        }});

    rows.push_back(CurveRow{
        "mix-3", "B[0,1] -> B[inf,1]", {}, always, label("B[0,1]"), label("B[inf,1]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), one(f), Epow(f, 2)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), -Epow(f, -3)});
        }});

    rows.push_back(CurveRow{
        "mix-4", "A[inf,0] -> B[inf,1]", {}, always, label("A[inf,0]"), label("B[inf,1]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            -Epow(f, -1), one(f), zero(f),
                            Epow(f, -2), -Epow(f, -1), E(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), one(f)});
        }});

    rows.push_back(CurveRow{
        "mix-5", "B[0,0] -> B[inf,0]", {}, always, label("B[0,0]"), label("B[inf,0]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {Epow(f, -2), zero(f), zero(f),
                            zero(f), Epow(f, -1), zero(f),
                            zero(f), zero(f), one(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), one(f)});
        }});

    rows.push_back(CurveRow{
        "mix-6", "B[inf,1] -> B[inf,0]", {}, always, label("B[inf,1]"), label("B[inf,0]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), Epow(f, 2)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), Epow(f, -1)});
        }});

    rows.push_back(CurveRow{
        "mix-7", "B[inf,1] -> C", {}, always, label("B[inf,1]"), label("C"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), zero(f), one(f),
                            zero(f), Epow(f, -1), zero(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), E(f)});
        }});

    rows.push_back(CurveRow{
        "mix-8", "B[inf,1] -> D", {}, always, label("B[inf,1]"), label("D"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), one(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), E(f)});
        }});

    rows.push_back(CurveRow{
        "mix-9", "E[0] -> E[inf]", {}, always, label("E[0]"), label("E[inf]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), one(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), one(f)});
        }});

    return rows;
}

std::vector<CurveRow> extra_curves() {
    std::vector<CurveRow> rows;
    auto zero = [](Field f) { return RatFunc(f); };
    auto one = [](Field f) { return RatFunc::constant(f.one()); };

    auto label = [](const char* text) {
        std::string s(text);
        return [s](const ParamMap&, Field f) { return OrbitLabel::parse(s, f); };
    };

    rows.push_back(CurveRow{
        "extra-1", "A[0,1] -> A[0,inf]", {}, always, label("A[0,1]"), label("A[0,inf]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), one(f), zero(f),
                            zero(f), zero(f), E(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), Epow(f, -1)});
        }});

    rows.push_back(CurveRow{
        "extra-2", "A[0,1] -> A[inf,0]", {}, always, label("A[0,1]"), label("A[inf,0]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), E(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), Epow(f, -1), -Epow(f, -1)});
        }});

    rows.push_back(CurveRow{
        "extra-3", "A[0,1] -> B[0,1]", {}, always, label("A[0,1]"), label("B[0,1]"),
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            -Epow(f, -1), one(f), zero(f),
                            zero(f), -Epow(f, -1), one(f)});
        },
        [=](const ParamMap&, Field f) {
            return mat2(f, {one(f), zero(f), zero(f), E(f)});
        }});

    rows.push_back(CurveRow{
        "extra-4", "E[l] -> O", {"l"}, always, Ef, Ol,
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), Epow(f, 2)});
        },
        nullptr});

    rows.push_back(CurveRow{
        "extra-5", "E[inf] -> O", {}, always, Ei, Ol,
        [=](const ParamMap&, Field f) {
            return mat3(f, {one(f), zero(f), zero(f),
                            zero(f), E(f), zero(f),
                            zero(f), zero(f), Epow(f, 2)});
        },
        nullptr});

    return rows;
}

std::vector<EpsMat> conjugate_curve(const EpsMat& g, const EpsMat* h, const MatrixTuple& a) {
    Field f = a.field();
    if (g.det().is_zero())
        throw singular_curve_matrix("conjugating family is singular");
    std::vector<EpsMat> comps;
    for (std::size_t i = 0; i < a.m(); ++i) comps.push_back(EpsMat::from_scalar(a.component(i)));
    if (h) {
        if (a.m() != 2) throw shape_mismatch("component mixing expects a pair");
        if (h->det().is_zero())
            throw singular_curve_matrix("mixing family is singular");
        std::vector<EpsMat> mixed;
        for (std::size_t i = 0; i < 2; ++i) {
            EpsMat c(f, a.n());
            for (std::size_t j = 0; j < 2; ++j) c = c + comps[j].scaled(h->at(i, j));
            mixed.push_back(std::move(c));
        }
        comps = std::move(mixed);
    }
    EpsMat ginv = g.inverse();
    for (EpsMat& c : comps) c = g * c * ginv;
    return comps;
}

MatrixTuple curve_limit(const std::vector<EpsMat>& conjugated, Field) {
    std::vector<Mat> comps;
    for (const EpsMat& c : conjugated) comps.push_back(c.limit_at_zero());
    return MatrixTuple(conjugated.at(0).size(), std::move(comps));
}

CurveReport verify_degeneration(const CurveRow& row, const ParamMap& binding, Field f) {
    CurveReport rep;
    rep.row_id = row.id;
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, v] : binding) {
            os << (first ? "" : ",") << k << "=" << v.str();
            first = false;
        }
        rep.binding = os.str();
    }
    try {
        OrbitLabel src = row.source(binding, f);
        OrbitLabel tgt = row.target(binding, f);
        rep.target_label = tgt.str();
        MatrixTuple a = representative(src, f);
        EpsMat g = row.g(binding, f);
        std::unique_ptr<EpsMat> h;
        if (row.h) h = std::make_unique<EpsMat>(row.h(binding, f));

        std::vector<EpsMat> conj = conjugate_curve(g, h.get(), a);
        rep.invertible = true;

        rep.pole_free = true;
        for (const EpsMat& c : conj)
            if (!c.pole_free_at_zero()) rep.pole_free = false;
        if (!rep.pole_free) {
            rep.detail = "conjugated tuple has a pole at eps = 0";
            return rep;
        }

        MatrixTuple limit = curve_limit(conj, f);
        OrbitLabel limit_label = classify_pair(limit);
        rep.limit_label = limit_label.str();
        rep.target_matches = (limit_label == tgt);

        // generic fiber: specialize eps at a point where everything is
        // defined. A plain conjugating curve must stay in the source orbit;
        // a mixed curve moves within the coarse orbit of the source, so the
        // fiber is compared after projecting to the mixed-action orbit.
        rep.source_matches = false;
        for (long c : {1L, 2L, 3L, 5L, 7L, 11L, 13L}) {
            Scalar cval = f.from_int(c);
            bool ok = true;
            std::vector<Mat> comps;
            for (const EpsMat& e : conj) {
                if (!e.pole_free_at(cval)) {
                    ok = false;
                    break;
                }
                comps.push_back(e.eval(cval));
            }
            if (!ok) continue;
            MatrixTuple at_c(a.n(), std::move(comps));
            OrbitLabel fiber = classify_pair(at_c);
            rep.source_matches = row.h ? classify_G(fiber) == classify_G(src) : fiber == src;
            break;
        }

        rep.pass = rep.invertible && rep.pole_free && rep.source_matches && rep.target_matches;
        if (!rep.pass && rep.detail.empty()) {
            std::ostringstream os;
            os << "limit " << rep.limit_label << " vs target " << rep.target_label
               << (rep.source_matches ? "" : "; generic fiber off the source orbit");
            rep.detail = os.str();
        }
    } catch (const error& e) {
        rep.detail = e.what();
        rep.pass = false;
    }
    return rep;
}

std::vector<CurveReport> verify_all_curves(const std::vector<CurveRow>& rows,
                                           const std::vector<long>& grid_values, Field f) {
    std::vector<CurveReport> out;
    for (const CurveRow& row : rows) {
        std::vector<ParamMap> bindings{{}};
        for (const std::string& name : row.params) {
            std::vector<ParamMap> next;
            for (const ParamMap& b : bindings)
                for (long v : grid_values) {
                    ParamMap nb = b;
                    nb.emplace(name, f.from_int(v));
                    next.push_back(std::move(nb));
                }
            bindings = std::move(next);
        }
        for (const ParamMap& b : bindings) {
            if (!row.guard(b)) continue;
            bool label_ok = true;
            try {
                row.source(b, f);
                row.target(b, f);
            } catch (const error&) {
                label_ok = false;  // binding violates a label invariant (e.g. m = 0)
            }
            if (!label_ok) continue;
            out.push_back(verify_degeneration(row, b, f));
        }
    }
    return out;
}

}  // namespace nullcone
