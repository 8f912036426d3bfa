#include "ufa/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

namespace ufa {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::optional<Block> classify(std::string_view name) {
    if (name == "alpha") return Block::Root;
    if (name.size() >= 1 && name[0] == 'a') return Block::Coefficient;
    if (name.size() >= 1 && name[0] == 'b') return Block::Factor;
    return std::nullopt;
}

// Sort key within a block: trailing decimal suffix first, then the name.
std::pair<long, std::string_view> suffix_key(std::string_view name) {
    std::size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
    long suffix = -1;
    if (i < name.size() && name.size() - i <= 9) {
        suffix = std::stol(std::string(name.substr(i)));
    }
    return {suffix, name};
}

class Parser {
public:
    Parser(std::string_view src, VarTablePtr table)
        : src_(src), table_(std::move(table)) {}

    UniPoly parse() {
        UniPoly p = expr();
        skip_ws();
        if (pos_ != src_.size()) {
            throw ParseError("unexpected trailing input", pos_);
        }
        return p;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) {
            throw ParseError("expected a number", start);
        }
        return Integer(std::string(src_.substr(start, pos_ - start)), 10);
    }

    unsigned exponent() {
        skip_ws();
        if (peek() == '-') {
            throw ParseError("negative exponent", pos_);
        }
        std::size_t start = pos_;
        Integer e = digits();
        if (e > 999) {
            throw ParseError("exponent too large", start);
        }
        return static_cast<unsigned>(e.get_ui());
    }

    UniPoly atom() {
        skip_ws();
        if (pos_ >= src_.size()) {
            throw ParseError("unexpected end of input", pos_);
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer num = digits();
            if (consume('/')) {
                Integer den = digits();
                if (sgn(den) == 0) {
                    throw ParseError("zero denominator", pos_);
                }
                return constant(Rational(num, den));
            }
            return constant(Rational(num));
        }
        if (ident_start(c)) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (name == "x") {
                return UniPoly::x(table_);
            }
            auto idx = table_->index_of(name);
            if (!idx) {
                throw ParseError("unknown variable '" + name + "'", start);
            }
            return UniPoly::from_coeffs(table_, {MultiPoly::variable(table_, *idx)});
        }
        if (c == '(') {
            ++pos_;
            UniPoly inner = expr();
            if (!consume(')')) {
                throw ParseError("expected ')'", pos_);
            }
            return inner;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    UniPoly factor() {
        UniPoly base = atom();
        if (consume('^')) {
            return base.pow(exponent());
        }
        return base;
    }

    UniPoly term() {
        UniPoly p = factor();
        while (consume('*')) {
            p = p * factor();
        }
        return p;
    }

    UniPoly expr() {
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = src_[pos_] == '-';
            ++pos_;
        }
        UniPoly p = term();
        if (negate) p = -p;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                UniPoly t = term();
                p = (c == '+') ? p + t : p - t;
            } else {
                break;
            }
        }
        return p;
    }

    UniPoly constant(Rational r) {
        return UniPoly::from_rationals(table_, {std::move(r)});
    }

    std::string_view src_;
    VarTablePtr table_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<VarDescriptor> scan_variables(std::string_view src) {
    std::vector<VarDescriptor> out;
    std::size_t pos = 0;
    while (pos < src.size()) {
        char c = src[pos];
        if (ident_start(c)) {
            std::size_t start = pos;
            while (pos < src.size() && ident_char(src[pos])) ++pos;
            std::string name(src.substr(start, pos - start));
            if (name == "x") continue;
            auto block = classify(name);
            if (!block) {
                throw ParseError("unknown variable '" + name +
                                     "' (declare it with --vars)",
                                 start);
            }
            out.push_back({std::move(name), *block});
        } else {
            ++pos;
        }
    }
    return out;
}

VarTablePtr build_parse_table(const std::vector<VarDescriptor>& descriptors) {
    std::vector<VarDescriptor> vars;
    for (const auto& d : descriptors) {
        bool dup = false;
        for (const auto& v : vars) {
            if (v.name == d.name) {
                if (v.block != d.block) {
                    throw std::invalid_argument("variable '" + d.name +
                                                "' declared in two blocks");
                }
                dup = true;
                break;
            }
        }
        if (!dup) vars.push_back(d);
    }
    auto block_rank = [](Block b) {
        return b == Block::Coefficient ? 0 : b == Block::Factor ? 1 : 2;
    };
    std::stable_sort(vars.begin(), vars.end(), [&](const VarDescriptor& a, const VarDescriptor& b) {
        if (a.block != b.block) return block_rank(a.block) < block_rank(b.block);
        return suffix_key(a.name) < suffix_key(b.name);
    });
    return make_table(std::move(vars));
}

VarTablePtr infer_table(std::string_view src) {
    return build_parse_table(scan_variables(src));
}

UniPoly parse_unipoly(std::string_view src, const VarTablePtr& table) {
    return Parser(src, table).parse();
}

MultiPoly parse_multipoly(std::string_view src, const VarTablePtr& table) {
    UniPoly p = parse_unipoly(src, table);
    if (!p.is_zero() && *p.degree() > 0) {
        throw ParseError("expected an x-free polynomial", 0);
    }
    return p.coeff(0);
}

}  // namespace ufa
