"""One-pass decomposition engine.

This module is the hot kernel: a single iterative DFS over a connected
component that simultaneously
  * classifies edges and fills the DFS annotations (dfs number, parent,
    lowpt, subtree size, per-vertex ear label of the parent edge),
  * maintains contracted supervertices (sigma member lists) and the live
    vertex path below each DFS vertex,
  * ejects finished components (bridges, cut-pair generators) and emits a
    construction-sequence payload per component,
  * grows/closes the cut-edge chains that become cactus cycles.

Everything mutable lives in flat integer arrays with explicit -1 sentinels so
the file stays self-contained (no imports) and compiles unchanged as a C
extension, which is how the optional compiled backend is produced.  All list
structures (sigma, construction sequences, chains, vertex paths) are intrusive
singly-linked lists spliced in O(1); nothing is ever copied while live.

Identifier conventions: edge ids 0..m-1 are the input edges; ids >= m are
virtual edges minted on ejection (appended to the shared endpoint arrays).
The "head" of a back edge is its endpoint with the smaller dfs number.
"""

TREE = 1
BACK = 2

# construction-sequence node kinds
CS_EAR = 0
CS_TREEPATH = 1
CS_VIRTEDGE = 2

# virtual edge kinds
VIRT_BACK = 0
VIRT_TREE = 1
VIRT_SEED = 2


def lex_less(dfs, desc, eu, ev, a, b):
    """Strict lexicographic order on back-edge ids; -1 is the undefined
    sentinel and compares greater than every edge (and not less than itself
    only when the other side is defined).

    Rules, in order: smaller head dfs wins; with equal heads, a descendant
    tail beats its ancestor, otherwise the smaller tail dfs wins; a parallel
    duplicate never beats the incumbent.
    """
    if b == -1:
        return True
    if a == -1:
        return False
    au = eu[a]
    av = ev[a]
    if dfs[au] < dfs[av]:
        q = au
        p = av
    else:
        q = av
        p = au
    bu = eu[b]
    bv = ev[b]
    if dfs[bu] < dfs[bv]:
        y = bu
        x = bv
    else:
        y = bv
        x = bu
    if dfs[q] < dfs[y]:
        return True
    if q == y:
        if not (dfs[p] <= dfs[x] < dfs[p] + desc[p]):
            if dfs[p] < dfs[x]:
                return True
        if dfs[x] <= dfs[p] < dfs[x] + desc[x] and x != p:
            return True
    return False


class Engine:
    """State for one decomposition over a shared vertex/edge id space.

    Run once per connected component via run(root); per-vertex state is
    initialized lazily on first visit, so one Engine instance serves a
    disconnected graph without re-allocation.
    """

    def __init__(self, n, adj_off, adj_eid, adj_other, eu, ev, debug=False):
        self.n = n
        self.adj_off = adj_off
        self.adj_eid = adj_eid
        self.adj_other = adj_other
        # endpoint arrays are shared with the caller and grow as virtual
        # edges are minted; ids stay dense
        self.eu = eu
        self.ev = ev
        self.m_real = len(eu)
        self.debug = debug

        self.dfs = [0] * n
        self.parent = [-1] * n
        self.parent_edge = [-1] * n
        self.lowpt = [0] * n
        self.desc = [0] * n
        self.ear_v = [-1] * n  # ear label of the parent edge, live
        self.edge_kind = [0] * self.m_real
        self.dfs_counter = 1

        self.p_hat = [-1] * n  # minimum escaping ear of the subtree
        self.anchor = [-1] * n  # minimum ear recorded in the CS
        self.path_next = [-1] * n  # vertex path; -1 terminates
        self.sig_head = [-1] * n
        self.sig_tail = [-1] * n
        self.sig_next = [-1] * n
        self.cs_head = [-1] * n
        self.cs_tail = [-1] * n
        self.cs_mark = [-1] * n  # rotation mark: start of the last merged tail block
        self.cs_mark_prev = [-1] * n
        self.tch_head = [-1] * n  # tree-generated chain of ejected nodes
        self.tch_tail = [-1] * n
        self.bch_head = [-1] * n  # back-generated chain of ejected nodes
        self.bch_tail = [-1] * n
        self.inc = [None] * n  # buffered incoming back-edge ids

        # construction-sequence nodes (intrusive list)
        self.cs_kind = []
        self.cs_data = []
        self.cs_next = []
        # chain nodes
        self.ch_label = []
        self.ch_next = []

        # outputs
        self.components = []  # (rep, members, payloads, seed_len, virtual_edge)
        self.bridges = []  # (parent, child, edge id)
        self.cycles = []  # (owner vertex, chain labels)
        self.virtuals = []  # (edge id, kind)

        self.events = 0

        if debug:
            self.alive = [True] * self.m_real
            self.owner = list(range(n))
            self.ejected = [False] * n

    # -- tiny helpers ----------------------------------------------------

    def head(self, e):
        a = self.eu[e]
        b = self.ev[e]
        return a if self.dfs[a] < self.dfs[b] else b

    def tail(self, e):
        a = self.eu[e]
        b = self.ev[e]
        return b if self.dfs[a] < self.dfs[b] else a

    def is_ancestor(self, a, b):
        dfs = self.dfs
        return dfs[a] <= dfs[b] < dfs[a] + self.desc[a]

    def _mint_virtual(self, a, b, kind):
        vid = len(self.eu)
        self.eu.append(a)
        self.ev.append(b)
        self.virtuals.append((vid, kind))
        if self.debug:
            self.alive.append(kind != VIRT_SEED)
        return vid

    def _new_cs_node(self, kind, data):
        self.cs_kind.append(kind)
        self.cs_data.append(data)
        self.cs_next.append(-1)
        self.events += 1
        return len(self.cs_kind) - 1

    def _new_chain_node(self, label):
        self.ch_label.append(label)
        self.ch_next.append(-1)
        self.events += 1
        return len(self.ch_label) - 1

    def _emit_cycle(self, owner, chain_head):
        labels = []
        node = chain_head
        while node != -1:
            labels.append(self.ch_label[node])
            node = self.ch_next[node]
        self.events += len(labels)
        self.cycles.append((owner, labels))

    def _collect_sigma(self, v):
        members = []
        node = self.sig_head[v]
        while node != -1:
            members.append(node)
            node = self.sig_next[node]
        self.events += len(members)
        return members

    def _ear_top(self, ear):
        """Topmost vertex of the ear's tree chunk: climb the tail's parents
        while the parent edge carries this ear label."""
        v = self.tail(ear)
        while self.parent[v] != -1 and self.ear_v[v] == ear:
            v = self.parent[v]
            self.events += 1
        return v

    # -- the pass --------------------------------------------------------

    def run(self, root):
        if self.dfs[root] != 0:
            raise ValueError(f"vertex {root} already visited")
        self._dfs_loop(root)
        self._finalize_root(root)

    def _enter(self, w, pe, par):
        self.dfs[w] = self.dfs_counter
        self.dfs_counter += 1
        self.parent[w] = par
        self.parent_edge[w] = pe
        self.lowpt[w] = self.dfs[w]
        self.desc[w] = 1
        self.sig_head[w] = w
        self.sig_tail[w] = w

    def _dfs_loop(self, root):
        adj_off = self.adj_off
        adj_eid = self.adj_eid
        adj_other = self.adj_other
        dfs = self.dfs

        self._enter(root, -1, -1)
        # frame: [vertex, parent edge id, adjacency cursor, returned child]
        stack = [[root, -1, adj_off[root], -1]]
        while stack:
            frame = stack[-1]
            w = frame[0]
            child = frame[3]
            if child != -1:
                frame[3] = -1
                self._child_return(w, child)
                continue
            i = frame[2]
            if i >= adj_off[w + 1]:
                self._post_scan(w)
                stack.pop()
                if stack:
                    stack[-1][3] = w
                continue
            frame[2] = i + 1
            eid = adj_eid[i]
            self.events += 1
            if eid == frame[1]:
                continue
            other = adj_other[i]
            d_other = dfs[other]
            if d_other == 0:
                self.edge_kind[eid] = TREE
                self._enter(other, eid, w)
                stack.append([other, eid, adj_off[other], -1])
            elif d_other < dfs[w]:
                self._outgoing_back(w, eid, other)
            else:
                # the tail side always scans a back edge before the head side
                if self.debug and self.edge_kind[eid] != BACK:
                    raise AssertionError(f"incoming edge {eid} not yet classified")
                inc = self.inc[w]
                if inc is None:
                    inc = []
                    self.inc[w] = inc
                inc.append(eid)

    def _outgoing_back(self, w, eid, other):
        self.edge_kind[eid] = BACK
        if self.lowpt[w] > self.dfs[other]:
            self.lowpt[w] = self.dfs[other]
        if lex_less(self.dfs, self.desc, self.eu, self.ev, eid, self.p_hat[w]):
            # better escape: the whole current path collapses into w
            self._absorb_ear(w, self.p_hat[w], self.path_next[w], -1, True)
            self.path_next[w] = -1
            self.p_hat[w] = eid
            self.ear_v[w] = eid
        else:
            self._absorb_ear(w, eid, -1, -1, False)

    def _child_return(self, w, u):
        self.events += 1
        if self.lowpt[w] > self.lowpt[u]:
            self.lowpt[w] = self.lowpt[u]
        self.desc[w] += self.desc[u]

        eject = self.anchor[u] == -1 or self.head(self.anchor[u]) == u
        if self.debug:
            self._debug_degree_test(w, u, eject)
        bt_head = -1
        bt_tail = -1
        content_start = u
        if eject:
            content_start, bt_head, bt_tail, is_bridge = self._eject(w, u)
            if is_bridge:
                # nothing to absorb: no path, no escaping ear, no chain; the
                # parent's state (including any open chain) stays live
                return
        if lex_less(self.dfs, self.desc, self.eu, self.ev, self.p_hat[w], self.p_hat[u]):
            # w's escape stays minimal: absorb the entire child path
            self._absorb_ear(w, self.p_hat[u], content_start, bt_head, True)
        else:
            # child escapes lower: absorb w's own path, then adopt the child's
            self._absorb_ear(w, self.p_hat[w], self.path_next[w], -1, True)
            if self.debug and self.bch_head[w] != -1:
                raise AssertionError(f"open chain at {w} survived its own-path absorb")
            self.bch_head[w] = bt_head
            self.bch_tail[w] = bt_tail
            self.path_next[w] = content_start
            self.p_hat[w] = self.p_hat[u]
            self.ear_v[w] = self.ear_v[u]

    def _post_scan(self, w):
        inc = self.inc[w]
        if inc is not None and self.path_next[w] != -1:
            self._absorb_path(w, inc)
        self.inc[w] = None
        if self.debug:
            self._debug_path_invariant(w)

    # -- ejection --------------------------------------------------------

    def _eject(self, w, u):
        """Emit the finished supervertex u (degree <= 2 in the contracted
        graph).  Returns (path content start, pending chain head, pending
        chain tail, is_bridge).
        """
        self.events += 1
        p_hat_u = self.p_hat[u]
        if p_hat_u == -1 or self.head(p_hat_u) == u:
            # degree 1: the parent edge is a bridge and u's component is done;
            # an open chain transferred up to u belongs to u's own cactus
            if self.bch_head[u] != -1:
                self._emit_cycle(u, self.bch_head[u])
                self.bch_head[u] = -1
                self.bch_tail[u] = -1
            if p_hat_u != -1:
                self._cs_prepend_one(u, self._new_cs_node(CS_EAR, p_hat_u))
            self.p_hat[u] = -1
            self.ear_v[u] = -1
            self.bridges.append((w, u, self.parent_edge[u]))
            if self.debug:
                self.alive[self.parent_edge[u]] = False
            self._emit_component(u, None, False)
            return -1, -1, -1, True

        bt_head = -1
        bt_tail = -1
        if self.path_next[u] == -1:
            # the cut-pair generator is the escaping back edge: extend the
            # pending chain with u and replace the corridor by a virtual
            # back edge from w to the escape head
            node = self._new_chain_node(u)
            if self.bch_head[u] == -1:
                bt_head = node
            else:
                bt_head = self.bch_head[u]
                self.ch_next[self.bch_tail[u]] = node
            bt_tail = node
            self.bch_head[u] = -1
            self.bch_tail[u] = -1
            udd = self.tail(p_hat_u)
            d = self.head(p_hat_u)
            if self.debug:
                self.alive[self.parent_edge[u]] = False
                self.alive[p_hat_u] = False
            if w != d:
                vid = self._mint_virtual(w, d, VIRT_BACK)
                self.p_hat[u] = vid
                self.ear_v[u] = vid
            else:
                # the replacement would be a self-loop at w; drop it (the ear
                # label stays so materialization can still walk this ear)
                self.p_hat[u] = -1
            content_start = -1
        else:
            # the cut-pair generator is the tree edge into the next path
            # vertex u1: u joins u1's chain, and the corridor w..u1 becomes a
            # virtual tree edge
            u1 = self.path_next[u]
            if self.debug and self.bch_head[u] != -1:
                raise AssertionError(f"open chain at {u} with a non-trivial path")
            node = self._new_chain_node(u)
            if self.tch_head[u1] == -1:
                self.tch_head[u1] = node
            else:
                self.ch_next[self.tch_tail[u1]] = node
            self.tch_tail[u1] = node
            udd = self.parent[u1]
            if self.debug:
                self.alive[self.parent_edge[u]] = False
                self.alive[self.parent_edge[u1]] = False
            vid = self._mint_virtual(w, u1, VIRT_TREE)
            self.parent[u1] = w
            self.parent_edge[u1] = vid
            self.ear_v[u1] = self.ear_v[u]
            content_start = u1

        virtual_edge = None
        if u != udd:
            # seed needs an explicit corridor: the tree path u..udd plus a
            # virtual edge (u, udd) lead the sequence
            tree_path = [udd]
            v = udd
            while v != u:
                v = self.parent[v]
                tree_path.append(v)
                self.events += 1
            if self._ear_top(self.anchor[u]) == u:
                self._cs_rotate(u)
            n_tree = self._new_cs_node(CS_TREEPATH, tree_path)
            svid = self._mint_virtual(u, udd, VIRT_SEED)
            n_virt = self._new_cs_node(CS_VIRTEDGE, (u, udd, svid))
            self.cs_next[n_tree] = n_virt
            self.cs_next[n_virt] = self.cs_head[u]
            if self.cs_head[u] == -1:
                self.cs_tail[u] = n_virt
            self.cs_head[u] = n_tree
            virtual_edge = (u, udd, svid)

        self._emit_component(u, virtual_edge, virtual_edge is not None)
        return content_start, bt_head, bt_tail, False

    def _cs_prepend_one(self, v, node):
        self.cs_next[node] = self.cs_head[v]
        if self.cs_head[v] == -1:
            self.cs_tail[v] = node
        self.cs_head[v] = node
        self.cs_mark[v] = -1
        self.cs_mark_prev[v] = -1

    def _cs_rotate(self, v):
        mark = self.cs_mark[v]
        if mark == -1 or mark == self.cs_head[v]:
            return
        mp = self.cs_mark_prev[v]
        self.cs_next[self.cs_tail[v]] = self.cs_head[v]
        self.cs_next[mp] = -1
        self.cs_head[v] = mark
        self.cs_tail[v] = mp
        self.events += 1

    def _emit_component(self, rep, virtual_edge, seeded_with_corridor):
        members = self._collect_sigma(rep)
        payloads = []
        seed_len = 0
        if len(members) > 1:
            node = self.cs_head[rep]
            while node != -1:
                payloads.append((self.cs_kind[node], self.cs_data[node]))
                node = self.cs_next[node]
            self.events += len(payloads)
            seed_len = 3 if seeded_with_corridor else 2
        self.cs_head[rep] = -1
        self.cs_tail[rep] = -1
        self.components.append((rep, members, payloads, seed_len, virtual_edge))
        if self.debug:
            self.ejected[rep] = True

    # -- absorption ------------------------------------------------------

    def _absorb_ear(self, w, p_hat_id, content_start, bt_head, has_path):
        """Fold an entire path (w's own, or w plus a child path) into sigma(w).

        p_hat_id is the escaping ear of the absorbed path (or -1); it joins
        the construction sequence ahead of the absorbed members' blocks.
        bt_head is a pending back-generated chain to close at w, exclusive
        with path content.  has_path False means a lone extra ear (worse
        outgoing back edge), which touches nothing but the sequence.
        """
        self.events += 1
        content = None
        if has_path:
            content = []
            x = content_start
            while x != -1:
                content.append(x)
                x = self.path_next[x]
            self.events += len(content)
            if bt_head != -1:
                self._emit_cycle(w, bt_head)
            else:
                last = w
                for x in content:
                    if self.tch_head[x] != -1:
                        self._emit_cycle(w, self.tch_head[x])
                        self.tch_head[x] = -1
                        self.tch_tail[x] = -1
                    last = x
                if self.bch_head[last] != -1:
                    # the deepest element ends an open chain; grown no
                    # further, it closes at the absorber
                    self._emit_cycle(w, self.bch_head[last])
                    self.bch_head[last] = -1
                    self.bch_tail[last] = -1
            for x in content:
                if self.debug:
                    self._debug_reown(w, x)
                self.sig_next[self.sig_tail[w]] = self.sig_head[x]
                self.sig_tail[w] = self.sig_tail[x]
                self.sig_head[x] = -1
                self.sig_tail[x] = -1
                self.events += 1

        # sequence block: the ear first, then absorbed blocks deepest-first
        block_head = -1
        block_tail = -1
        if p_hat_id != -1:
            block_head = block_tail = self._new_cs_node(CS_EAR, p_hat_id)
        if content:
            for k in range(len(content) - 1, -1, -1):
                x = content[k]
                if self.cs_head[x] != -1:
                    if block_head == -1:
                        block_head = self.cs_head[x]
                    else:
                        self.cs_next[block_tail] = self.cs_head[x]
                    block_tail = self.cs_tail[x]
                    self.cs_head[x] = -1
                    self.cs_tail[x] = -1
                    self.events += 1
        if block_head != -1:
            if lex_less(self.dfs, self.desc, self.eu, self.ev, p_hat_id, self.anchor[w]):
                self.cs_next[block_tail] = self.cs_head[w]
                if self.cs_head[w] == -1:
                    self.cs_tail[w] = block_tail
                self.cs_head[w] = block_head
                self.anchor[w] = p_hat_id
            else:
                if self.cs_head[w] == -1:
                    self.cs_head[w] = block_head
                else:
                    self.cs_next[self.cs_tail[w]] = block_head
                self.cs_tail[w] = block_tail
        self.cs_mark[w] = -1
        self.cs_mark_prev[w] = -1
        if self.debug:
            self._debug_check_anchor(w)

    def _absorb_path(self, w, inc):
        """Fold the path section reached by buffered incoming back edges."""
        self.events += 1
        eu = self.eu
        ev = self.ev
        nodes = [w]
        # h advances monotonically over all incoming tails, touching only
        # path elements up to the deepest ancestor reached
        h = 0
        for e in inc:
            self.events += 1
            x = ev[e] if eu[e] == w else eu[e]
            while True:
                if h + 1 >= len(nodes):
                    nxt = self.path_next[nodes[-1]]
                    if nxt == -1:
                        break
                    nodes.append(nxt)
                cand = nodes[h + 1]
                if self.is_ancestor(cand, x):
                    h += 1
                    self.events += 1
                else:
                    break
        if h == 0:
            self.cs_mark[w] = -1
            self.cs_mark_prev[w] = -1
            return

        for j in range(1, h + 1):
            x = nodes[j]
            if self.tch_head[x] != -1:
                self._emit_cycle(w, self.tch_head[x])
                self.tch_head[x] = -1
                self.tch_tail[x] = -1

        # smallest anchor among w and the absorbed section leads the merged
        # sequence; ties on the undefined sentinel resolve to the deepest
        best = 0
        for j in range(1, h + 1):
            if lex_less(self.dfs, self.desc, eu, ev, self.anchor[nodes[j]], self.anchor[nodes[best]]):
                best = j
            self.events += 1
        l = best
        self.anchor[w] = self.anchor[nodes[l]]

        order = []
        if l != h:
            order.append(l)
        order.append(h)
        for j in range(0, h):
            if j != l:
                order.append(j)
        new_head = -1
        new_tail = -1
        tail_l = -1
        for j in order:
            x = nodes[j]
            if self.cs_head[x] != -1:
                if new_head == -1:
                    new_head = self.cs_head[x]
                else:
                    self.cs_next[new_tail] = self.cs_head[x]
                new_tail = self.cs_tail[x]
                self.cs_head[x] = -1
                self.cs_tail[x] = -1
                self.events += 1
            if l != h and j == l:
                tail_l = new_tail
        self.cs_head[w] = new_head
        self.cs_tail[w] = new_tail
        if l != h and tail_l != -1:
            self.cs_mark[w] = self.cs_next[tail_l]
            self.cs_mark_prev[w] = tail_l
        else:
            self.cs_mark[w] = -1
            self.cs_mark_prev[w] = -1

        for j in range(1, h + 1):
            x = nodes[j]
            if self.debug:
                self._debug_reown(w, x)
            self.sig_next[self.sig_tail[w]] = self.sig_head[x]
            self.sig_tail[w] = self.sig_tail[x]
            self.sig_head[x] = -1
            self.sig_tail[x] = -1
            self.events += 1

        # truncate the path past the absorbed section
        last = nodes[h]
        rest = self.path_next[last]
        self.path_next[w] = rest

        # an open chain may only sit on the terminal absorbed element, and
        # only when the section consumed the whole path; it transfers to w
        for j in range(1, h):
            if self.bch_head[nodes[j]] != -1:
                raise RuntimeError("open chain on an interior path element")
        if self.bch_head[last] != -1:
            if rest != -1:
                raise RuntimeError("open chain on a non-terminal path element")
            if self.bch_head[w] != -1:
                raise RuntimeError("absorber already holds an open chain")
            self.bch_head[w] = self.bch_head[last]
            self.bch_tail[w] = self.bch_tail[last]
            self.bch_head[last] = -1
            self.bch_tail[last] = -1
        if self.debug:
            self._debug_check_anchor(w)

    # -- root ------------------------------------------------------------

    def _finalize_root(self, root):
        if self.bch_head[root] != -1:
            self._emit_cycle(root, self.bch_head[root])
            self.bch_head[root] = -1
            self.bch_tail[root] = -1
        if self.p_hat[root] != -1:
            self._cs_prepend_one(root, self._new_cs_node(CS_EAR, self.p_hat[root]))
            self.p_hat[root] = -1
        self._emit_component(root, None, False)

    # -- debug invariants ------------------------------------------------

    def _debug_reown(self, w, x):
        node = self.sig_head[x]
        while node != -1:
            self.owner[node] = w
            node = self.sig_next[node]

    def _debug_degree(self, u):
        deg = 0
        for e in range(len(self.eu)):
            if not self.alive[e]:
                continue
            a = self.owner[self.eu[e]] == u
            b = self.owner[self.ev[e]] == u
            if a != b:
                deg += 1
        return deg

    def _debug_degree_test(self, w, u, eject):
        deg = self._debug_degree(u)
        if eject != (deg <= 2):
            raise AssertionError(
                f"anchor degree test disagrees at {u}: test says {eject}, degree is {deg}"
            )
        if eject:
            is_bridge = self.p_hat[u] == -1 or self.head(self.p_hat[u]) == u
            if is_bridge != (deg == 1):
                raise AssertionError(
                    f"bridge test disagrees at {u}: test says {is_bridge}, degree is {deg}"
                )

    def _debug_check_anchor(self, w):
        # the sequence head must be its lexicographic minimum ear
        node = self.cs_head[w]
        best = -1
        first_ear = -1
        while node != -1:
            if self.cs_kind[node] == CS_EAR:
                e = self.cs_data[node]
                if first_ear == -1:
                    first_ear = e
                if best == -1 or lex_less(self.dfs, self.desc, self.eu, self.ev, e, best):
                    best = e
            node = self.cs_next[node]
        if best != first_ear:
            raise AssertionError(f"sequence head at {w} is not the minimum ear")
        if self.anchor[w] != best:
            raise AssertionError(f"anchor array at {w} disagrees with the sequence")

    def _debug_path_invariant(self, w):
        seen = {w}
        x = w
        while self.path_next[x] != -1:
            nxt = self.path_next[x]
            if not self.is_ancestor(x, nxt) or x == nxt:
                raise AssertionError(f"path below {w} not strictly descending at {x}")
            if nxt in seen:
                raise AssertionError(f"path below {w} has a cycle")
            seen.add(nxt)
            x = nxt
        # every live representative in the subtree must lie on the path
        lo = self.dfs[w]
        hi = lo + self.desc[w]
        for v in range(self.n):
            if lo <= self.dfs[v] < hi and not self.ejected[v] and self.owner[v] == v:
                if v not in seen:
                    raise AssertionError(f"live representative {v} missing from path of {w}")
        if self.p_hat[w] != -1:
            t = self.tail(self.p_hat[w])
            deepest = x
            if not self.is_ancestor(deepest, t):
                raise AssertionError(f"escape tail of {w} outside the deepest element")
