#include "anim/typeset.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "anim/easing.hpp"

namespace anim {

namespace {

const std::set<std::string>& greek_names() {
    static const std::set<std::string> names = {
        "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta",
        "iota", "kappa", "lambda", "mu", "nu", "xi", "omicron", "pi", "rho",
        "sigma", "tau", "upsilon", "phi", "chi", "psi", "omega",
        "Gamma", "Delta", "Theta", "Lambda", "Xi", "Pi", "Sigma", "Upsilon",
        "Phi", "Psi", "Omega",
    };
    return names;
}

bool is_big_operator(const std::string& name) {
    return name == "sum" || name == "prod" || name == "int";
}

bool is_symbol(const std::string& name) {
    return name == "infty" || greek_names().count(name) > 0;
}

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    std::vector<NykaNode> parse() {
        std::vector<NykaNode> out;
        std::string run;
        size_t run_pos = 0;
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '$') {
                if (!run.empty()) {
                    out.push_back(text_run(std::move(run), run_pos));
                    run.clear();
                }
                size_t dollar = pos_++;
                NykaNode group;
                group.kind = NykaNode::Kind::math_group;
                group.pos = dollar;
                group.children = parse_group('$', dollar);
                out.push_back(std::move(group));
                run_pos = pos_;
            } else {
                if (run.empty())
                    run_pos = pos_;
                run.push_back(c);
                ++pos_;
            }
        }
        if (!run.empty())
            out.push_back(text_run(std::move(run), run_pos));
        return out;
    }

private:
    static NykaNode text_run(std::string text, size_t pos) {
        NykaNode node;
        node.kind = NykaNode::Kind::text_run;
        node.text = std::move(text);
        node.pos = pos;
        return node;
    }

    // Parses math atoms until the closing delimiter ('$', ']' or '}').
    std::vector<NykaNode> parse_group(char close, size_t open_pos) {
        std::vector<NykaNode> atoms;
        bool pending_space = false;
        while (true) {
            if (pos_ >= s_.size()) {
                if (close == '$')
                    throw Error(errc::unbalanced_dollar,
                                "math mode opened at position " + std::to_string(open_pos) +
                                    " is never closed");
                throw Error(errc::unbalanced_bracket,
                            "group opened at position " + std::to_string(open_pos) +
                                " is never closed");
            }
            char c = s_[pos_];
            if (c == close) {
                ++pos_;
                return atoms;
            }
            if (c == ']' || c == '}' || c == '$') {
                throw Error(errc::unbalanced_bracket,
                            std::string("unexpected '") + c + "' at position " +
                                std::to_string(pos_));
            }
            if (is_space(c)) {
                pending_space = true;
                ++pos_;
                continue;
            }
            if (c == '^' || c == '_') {
                size_t script_pos = pos_++;
                if (atoms.empty())
                    throw Error(errc::dangling_script,
                                std::string("'") + c + "' at position " +
                                    std::to_string(script_pos) + " has no base");
                skip_spaces();
                NykaNode arg = parse_script_operand(script_pos, c);
                NykaNode node;
                node.kind = c == '^' ? NykaNode::Kind::superscript : NykaNode::Kind::subscript;
                node.pos = script_pos;
                node.space_before = atoms.back().space_before;
                atoms.back().space_before = false;
                node.children.push_back(std::move(atoms.back()));
                node.children.push_back(std::move(arg));
                atoms.back() = std::move(node);
                continue;
            }
            NykaNode atom = parse_atom();
            atom.space_before = pending_space;
            pending_space = false;
            if (atom.kind == NykaNode::Kind::style_flag) {
                // \displaystyle applies to the rest of the group.
                atom.children = parse_group(close, atom.pos);
                atoms.push_back(std::move(atom));
                return atoms;
            }
            atoms.push_back(std::move(atom));
        }
    }

    void skip_spaces() {
        while (pos_ < s_.size() && is_space(s_[pos_]))
            ++pos_;
    }

    NykaNode parse_script_operand(size_t script_pos, char script_char) {
        if (pos_ >= s_.size() || s_[pos_] == '$' || s_[pos_] == ']' || s_[pos_] == '}' ||
            s_[pos_] == '^' || s_[pos_] == '_')
            throw Error(errc::dangling_script,
                        std::string("'") + script_char + "' at position " +
                            std::to_string(script_pos) + " has no operand");
        return parse_atom();
    }

    NykaNode parse_atom() {
        char c = s_[pos_];
        if (c == '[' || c == '{') {
            size_t open = pos_++;
            NykaNode group;
            group.kind = NykaNode::Kind::math_group;
            group.pos = open;
            group.children = parse_group(c == '[' ? ']' : '}', open);
            return group;
        }
        if (c == '\\')
            return parse_command();
        NykaNode node;
        node.kind = NykaNode::Kind::text_run;
        node.text = std::string(1, c);
        node.pos = pos_++;
        return node;
    }

    NykaNode parse_command() {
        size_t start = pos_++; // at '\'
        std::string name;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            name.push_back(s_[pos_++]);
        if (name.empty())
            throw Error(errc::unknown_command,
                        "empty command at position " + std::to_string(start));
        NykaNode node;
        node.pos = start;
        node.text = name;
        if (is_big_operator(name)) {
            node.kind = NykaNode::Kind::big_operator;
            if (auto lower = try_parse_arg_group()) {
                node.has_lower = true;
                node.children.push_back(std::move(*lower));
                if (auto upper = try_parse_arg_group()) {
                    node.has_upper = true;
                    node.children.push_back(std::move(*upper));
                }
            }
            return node;
        }
        if (name == "frac") {
            node.kind = NykaNode::Kind::fraction;
            auto num = try_parse_arg_group();
            auto den = num ? try_parse_arg_group() : std::nullopt;
            if (!num || !den)
                throw Error(errc::missing_argument,
                            "\\frac at position " + std::to_string(start) +
                                " needs two bracket arguments");
            node.children.push_back(std::move(*num));
            node.children.push_back(std::move(*den));
            return node;
        }
        if (name == "displaystyle") {
            node.kind = NykaNode::Kind::style_flag;
            return node;
        }
        if (is_symbol(name)) {
            node.kind = NykaNode::Kind::symbol;
            return node;
        }
        throw Error(errc::unknown_command,
                    "\\" + name + " at position " + std::to_string(start));
    }

    // Argument groups must be adjacent to the command (no space), so that
    // "\sum [a]" keeps [a] as an ordinary group.
    std::optional<NykaNode> try_parse_arg_group() {
        if (pos_ >= s_.size() || (s_[pos_] != '[' && s_[pos_] != '{'))
            return std::nullopt;
        char open_char = s_[pos_];
        size_t open = pos_++;
        NykaNode group;
        group.kind = NykaNode::Kind::math_group;
        group.pos = open;
        group.children = parse_group(open_char == '[' ? ']' : '}', open);
        return group;
    }

    const std::string& s_;
    size_t pos_ = 0;
};

// --- TeX serialization ----------------------------------------------------

std::string tex_of_nodes(const std::vector<NykaNode>& nodes, bool top_level);
std::string tex_of_atom(const NykaNode& node);

// Single ordinary characters stay bare (q^i); everything else is braced.
std::string tex_of_script_arg(const NykaNode& node) {
    if (node.kind == NykaNode::Kind::text_run && node.text.size() == 1)
        return node.text;
    if (node.kind == NykaNode::Kind::math_group)
        return "{" + tex_of_nodes(node.children, false) + "}";
    return "{" + tex_of_atom(node) + "}";
}

std::string tex_of_atom(const NykaNode& node) {
    switch (node.kind) {
    case NykaNode::Kind::text_run:
        return node.text;
    case NykaNode::Kind::math_group:
        return "{" + tex_of_nodes(node.children, false) + "}";
    case NykaNode::Kind::symbol:
        return "\\" + node.text;
    case NykaNode::Kind::big_operator: {
        std::string out = "\\" + node.text;
        size_t idx = 0;
        if (node.has_lower)
            out += "_" + tex_of_script_arg(node.children[idx++]);
        if (node.has_upper)
            out += "^" + tex_of_script_arg(node.children[idx]);
        return out;
    }
    case NykaNode::Kind::fraction:
        return "\\frac{" + tex_of_nodes(node.children[0].children, false) + "}{" +
               tex_of_nodes(node.children[1].children, false) + "}";
    case NykaNode::Kind::superscript:
        return tex_of_atom(node.children[0]) + "^" + tex_of_script_arg(node.children[1]);
    case NykaNode::Kind::subscript:
        return tex_of_atom(node.children[0]) + "_" + tex_of_script_arg(node.children[1]);
    case NykaNode::Kind::style_flag:
        return "\\displaystyle" + tex_of_nodes(node.children, false);
    }
    return "";
}

std::string tex_of_nodes(const std::vector<NykaNode>& nodes, bool top_level) {
    std::string out;
    for (const NykaNode& node : nodes) {
        if (top_level) {
            if (node.kind == NykaNode::Kind::math_group)
                out += "$" + tex_of_nodes(node.children, false) + "$";
            else
                out += node.text;
            continue;
        }
        if (node.space_before)
            out += " ";
        out += tex_of_atom(node);
    }
    return out;
}

// --- Fragment layout --------------------------------------------------------

struct Piece {
    std::vector<Fragment> frags;
    double width = 0;
};

void append_at(Piece& dst, Piece src, Vec2 at) {
    for (Fragment& f : src.frags) {
        f.offset = f.offset + at;
        dst.frags.push_back(std::move(f));
    }
}

class Layout {
public:
    explicit Layout(const GlyphMetrics& metrics) : m_(metrics) {}

    Piece nodes(const std::vector<NykaNode>& list, double size, int level, bool math,
                bool display) const {
        Piece out;
        for (const NykaNode& node : list) {
            Piece piece = atom(node, size, level, math, display);
            double w = piece.width;
            append_at(out, std::move(piece), {out.width, 0});
            out.width += w;
        }
        return out;
    }

    Piece atom(const NykaNode& node, double size, int level, bool math,
               bool display) const {
        Piece out;
        switch (node.kind) {
        case NykaNode::Kind::text_run: {
            double x = 0;
            for (char c : node.text) {
                if (is_space(c)) {
                    // Spaces advance the cursor in text mode and vanish in
                    // math mode; neither emits a fragment.
                    if (!math)
                        x += m_.advance(" ", size);
                    continue;
                }
                out.frags.push_back(glyph(std::string(1, c), {x, 0}, size, level, math));
                x += m_.advance(std::string(1, c), size);
            }
            out.width = x;
            break;
        }
        case NykaNode::Kind::math_group:
            out = nodes(node.children, size, level, true, display);
            break;
        case NykaNode::Kind::symbol:
            out.frags.push_back(glyph(node.text, {0, 0}, size, level, true));
            out.width = m_.advance(node.text, size);
            break;
        case NykaNode::Kind::big_operator:
            out = big_operator(node, size, level, display);
            break;
        case NykaNode::Kind::fraction:
            out = fraction(node, size, level);
            break;
        case NykaNode::Kind::superscript:
        case NykaNode::Kind::subscript: {
            bool up = node.kind == NykaNode::Kind::superscript;
            Piece base = atom(node.children[0], size, level, math, display);
            Piece script = atom(node.children[1], size * layout::kScriptScale, level + 1,
                                true, false);
            double base_w = base.width;
            double script_w = script.width;
            out = std::move(base);
            append_at(out, std::move(script),
                      {base_w, (up ? 1.0 : -1.0) * layout::kScriptShift * size});
            out.width = base_w + script_w;
            break;
        }
        case NykaNode::Kind::style_flag:
            out = nodes(node.children, size, level, true, true);
            break;
        }
        return out;
    }

private:
    Fragment glyph(std::string name, Vec2 at, double size, int level, bool math) const {
        Fragment f;
        f.glyph = std::move(name);
        f.offset = at;
        f.size = size;
        f.math_mode = math;
        f.script_level = level;
        f.box_w = m_.advance(f.glyph, size) * layout::kBoxWidthRatio;
        f.box_h = m_.height(f.glyph, size);
        return f;
    }

    Piece big_operator(const NykaNode& node, double size, int level, bool display) const {
        double op_adv = m_.advance(node.text, size);
        double limit_size = size * layout::kScriptScale;
        std::optional<Piece> lower, upper;
        size_t idx = 0;
        if (node.has_lower)
            lower = nodes(node.children[idx++].children, limit_size, level + 1, true, false);
        if (node.has_upper)
            upper = nodes(node.children[idx].children, limit_size, level + 1, true, false);

        Piece out;
        if (display) {
            // Limits stack centered below/above the operator.
            double width = op_adv;
            if (lower)
                width = std::max(width, lower->width);
            if (upper)
                width = std::max(width, upper->width);
            Piece op;
            op.frags.push_back(glyph(node.text, {0, 0}, size, level, true));
            append_at(out, std::move(op), {(width - op_adv) / 2, 0});
            if (lower) {
                double w = lower->width;
                append_at(out, std::move(*lower),
                          {(width - w) / 2, -layout::kLowerLimitDrop * size});
            }
            if (upper) {
                double w = upper->width;
                append_at(out, std::move(*upper),
                          {(width - w) / 2, layout::kUpperLimitRaise * size});
            }
            out.width = width;
        } else {
            // Inline style: limits ride along as side scripts.
            out.frags.push_back(glyph(node.text, {0, 0}, size, level, true));
            double script_w = 0;
            if (lower) {
                script_w = std::max(script_w, lower->width);
                append_at(out, std::move(*lower), {op_adv, -layout::kScriptShift * size});
            }
            if (upper) {
                script_w = std::max(script_w, upper->width);
                append_at(out, std::move(*upper), {op_adv, layout::kScriptShift * size});
            }
            out.width = op_adv + script_w;
        }
        return out;
    }

    Piece fraction(const NykaNode& node, double size, int level) const {
        double part_size = size * layout::kScriptScale;
        Piece num = nodes(node.children[0].children, part_size, level + 1, true, false);
        Piece den = nodes(node.children[1].children, part_size, level + 1, true, false);
        double inner = std::max(num.width, den.width);
        double width = inner + 2 * layout::kFracPad * size;

        Piece out;
        double num_w = num.width;
        double den_w = den.width;
        append_at(out, std::move(num), {(width - num_w) / 2, layout::kFracNumRaise * size});

        Fragment bar;
        bar.glyph = "fracbar";
        bar.offset = {0, layout::kFracBarRaise * size};
        bar.size = size;
        bar.math_mode = true;
        bar.script_level = level;
        bar.box_w = width;
        bar.box_h = layout::kFracBarThickness * size;
        out.frags.push_back(std::move(bar));

        append_at(out, std::move(den), {(width - den_w) / 2, -layout::kFracDenDrop * size});
        out.width = width;
        return out;
    }

    const GlyphMetrics& m_;
};

} // namespace

std::vector<NykaNode> parse_nyka(const std::string& s) {
    return Parser(s).parse();
}

std::string nyka_to_tex(const std::string& s) {
    return tex_of_nodes(parse_nyka(s), true);
}

FragmentedString fragment(const std::string& s, double size, const GlyphMetrics& metrics) {
    if (!(size > 0))
        throw Error(errc::non_positive_size,
                    "text size must be > 0, got " + std::to_string(size));
    std::vector<NykaNode> nodes = parse_nyka(s);
    Piece piece = Layout(metrics).nodes(nodes, size, 0, false, false);
    FragmentedString fs;
    fs.fragments = std::move(piece.frags);
    fs.source = s;
    fs.size = size;
    fs.metrics_id = metrics.id();
    return fs;
}

size_t fragment_length(const FragmentedString& fs) {
    return fs.fragments.size();
}

std::vector<TypingState> typing_states(const FragmentedString& fs, double t,
                                       const std::string& mode) {
    if (mode != "up" && mode != "fade" && mode != "appear")
        throw Error(errc::unknown_mode, "typing mode \"" + mode + "\"");
    size_t n = fs.fragments.size();
    std::vector<TypingState> out(n);
    for (size_t i = 0; i < n; ++i) {
        double local = std::clamp(t * static_cast<double>(n) - static_cast<double>(i), 0.0, 1.0);
        TypingState& st = out[i];
        if (mode == "up") {
            st.alpha = local;
            st.extra_offset = {0, -layout::kTypingRise * fs.size *
                                      (1 - ease(EasingKind::outCubic, local))};
        } else if (mode == "fade") {
            st.alpha = local;
        } else {
            st.alpha = local > 0 ? 1.0 : 0.0;
        }
    }
    return out;
}

} // namespace anim
