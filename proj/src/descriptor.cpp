#include "thueforms/descriptor.hpp"

#include <map>

#include "thueforms/errors.hpp"

namespace thue {

namespace {

// split "k1=v1,k2=[a,b],k3=v3" on commas at bracket depth 0
std::map<std::string, std::string> parse_kv(const std::string& body) {
    std::map<std::string, std::string> kv;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        if (end <= start) return;
        std::string item = body.substr(start, end - start);
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("descriptor item without '=': " + item);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    };
    for (std::size_t i = 0; i < body.size(); ++i) {
        char ch = body[i];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        if (ch == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(body.size());
    if (depth != 0) throw UsageError("unbalanced brackets in descriptor");
    return kv;
}

long long parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw UsageError("expected an integer for " + what + ", got '" + s + "'");
    }
}

std::vector<Rat> parse_rat_list(const std::string& s, const std::string& what) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw UsageError(what + " must be a bracketed list");
    std::vector<Rat> out;
    std::string body = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || body[i] == ',') {
            std::string item = body.substr(start, i - start);
            if (!item.empty()) {
                try {
                    out.push_back(rat_from_string(item));
                } catch (const std::exception&) {
                    throw UsageError("bad entry '" + item + "' in " + what);
                }
            }
            start = i + 1;
        }
    }
    return out;
}

template <typename M>
std::string take(M& kv, const std::string& key, const std::string& desc) {
    auto it = kv.find(key);
    if (it == kv.end()) throw UsageError(desc + " descriptor needs " + key + "=...");
    std::string v = it->second;
    kv.erase(it);
    return v;
}

template <typename M>
void reject_leftovers(const M& kv, const std::string& desc) {
    if (!kv.empty()) throw UsageError("unknown key '" + kv.begin()->first + "' in " + desc);
}

} // namespace

FamilyDescriptor parse_descriptor(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw UsageError("descriptor must look like 'kind:key=value,...'");
    std::string kind = text.substr(0, colon);
    auto kv = parse_kv(text.substr(colon + 1));

    FamilyDescriptor d;
    d.text = text;
    if (kind == "bh") {
        d.kind = FamilyDescriptor::Kind::BernsteinHasse;
        BernsteinHasseParams p;
        p.D = parse_int(take(kv, "D", "bh"), "D");
        p.n = static_cast<int>(parse_int(take(kv, "n", "bh"), "n"));
        p.c = static_cast<int>(parse_int(take(kv, "c", "bh"), "c"));
        reject_leftovers(kv, "bh");
        try {
            p.validate();
        } catch (const InvalidParams& e) {
            throw UsageError(e.what());
        }
        d.bh = p;
    } else if (kind == "shanks") {
        d.kind = FamilyDescriptor::Kind::Shanks;
        ShanksParams p;
        p.n = parse_int(take(kv, "n", "shanks"), "n");
        if (kv.count("b1")) p.b1 = parse_int(take(kv, "b1", "shanks"), "b1");
        if (kv.count("b2")) p.b2 = parse_int(take(kv, "b2", "shanks"), "b2");
        if (kv.count("c1")) p.c1 = parse_int(take(kv, "c1", "shanks"), "c1");
        if (kv.count("c2")) p.c2 = parse_int(take(kv, "c2", "shanks"), "c2");
        reject_leftovers(kv, "shanks");
        try {
            p.validate();
        } catch (const InvalidParams& e) {
            throw UsageError(e.what());
        }
        d.shanks = p;
    } else if (kind == "custom") {
        d.kind = FamilyDescriptor::Kind::Custom;
        auto poly_list = parse_rat_list(take(kv, "poly", "custom"), "poly");
        std::vector<Int> coeffs;
        for (const auto& q : poly_list) {
            if (!is_integer(q)) throw UsageError("poly entries must be integers");
            coeffs.push_back(num(q));
        }
        d.poly = IntPoly(std::move(coeffs));
        d.alpha_coords = parse_rat_list(take(kv, "alpha", "custom"), "alpha");
        d.eps_coords = parse_rat_list(take(kv, "eps", "custom"), "eps");
        reject_leftovers(kv, "custom");
    } else {
        throw UsageError("unknown family kind '" + kind + "' (use bh, shanks or custom)");
    }
    return d;
}

TwistedFamily FamilyDescriptor::build() const {
    switch (kind) {
        case Kind::BernsteinHasse:
            return bh_build(*bh);
        case Kind::Shanks:
            return shanks_build(*shanks);
        case Kind::Custom: {
            auto field = NumberField::create(*poly);
            auto pad = [&](std::vector<Rat> v) {
                if (static_cast<int>(v.size()) > field->degree())
                    throw UsageError("coordinate vector longer than field degree");
                v.resize(field->degree(), Rat(0));
                return v;
            };
            FieldElement alpha(field, pad(alpha_coords));
            FieldElement eps(field, pad(eps_coords));
            return family_new(field, alpha, eps);
        }
    }
    throw std::logic_error("unreachable");
}

} // namespace thue
