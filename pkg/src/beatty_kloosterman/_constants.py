"""Embedded decimal expansions of pi and e (4096 digits after the point, truncated)."""

PI_DIGITS = (
    "3.1415926535897932384626433832795028841971693993751058209749445923078164"
    "062862089986280348253421170679821480865132823066470938446095505822317253"
    "594081284811174502841027019385211055596446229489549303819644288109756659"
    "334461284756482337867831652712019091456485669234603486104543266482133936"
    "072602491412737245870066063155881748815209209628292540917153643678925903"
    "600113305305488204665213841469519415116094330572703657595919530921861173"
    "819326117931051185480744623799627495673518857527248912279381830119491298"
    "336733624406566430860213949463952247371907021798609437027705392171762931"
    "767523846748184676694051320005681271452635608277857713427577896091736371"
    "787214684409012249534301465495853710507922796892589235420199561121290219"
    "608640344181598136297747713099605187072113499999983729780499510597317328"
    "160963185950244594553469083026425223082533446850352619311881710100031378"
    "387528865875332083814206171776691473035982534904287554687311595628638823"
    "537875937519577818577805321712268066130019278766111959092164201989380952"
    "572010654858632788659361533818279682303019520353018529689957736225994138"
    "912497217752834791315155748572424541506959508295331168617278558890750983"
    "817546374649393192550604009277016711390098488240128583616035637076601047"
    "101819429555961989467678374494482553797747268471040475346462080466842590"
    "694912933136770289891521047521620569660240580381501935112533824300355876"
    "402474964732639141992726042699227967823547816360093417216412199245863150"
    "302861829745557067498385054945885869269956909272107975093029553211653449"
    "872027559602364806654991198818347977535663698074265425278625518184175746"
    "728909777727938000816470600161452491921732172147723501414419735685481613"
    "611573525521334757418494684385233239073941433345477624168625189835694855"
    "620992192221842725502542568876717904946016534668049886272327917860857843"
    "838279679766814541009538837863609506800642251252051173929848960841284886"
    "269456042419652850222106611863067442786220391949450471237137869609563643"
    "719172874677646575739624138908658326459958133904780275900994657640789512"
    "694683983525957098258226205224894077267194782684826014769909026401363944"
    "374553050682034962524517493996514314298091906592509372216964615157098583"
    "874105978859597729754989301617539284681382686838689427741559918559252459"
    "539594310499725246808459872736446958486538367362226260991246080512438843"
    "904512441365497627807977156914359977001296160894416948685558484063534220"
    "722258284886481584560285060168427394522674676788952521385225499546667278"
    "239864565961163548862305774564980355936345681743241125150760694794510965"
    "960940252288797108931456691368672287489405601015033086179286809208747609"
    "178249385890097149096759852613655497818931297848216829989487226588048575"
    "640142704775551323796414515237462343645428584447952658678210511413547357"
    "395231134271661021359695362314429524849371871101457654035902799344037420"
    "073105785390621983874478084784896833214457138687519435064302184531910484"
    "810053706146806749192781911979399520614196634287544406437451237181921799"
    "983910159195618146751426912397489409071864942319615679452080951465502252"
    "316038819301420937621378559566389377870830390697920773467221825625996615"
    "014215030680384477345492026054146659252014974428507325186660021324340881"
    "907104863317346496514539057962685610055081066587969981635747363840525714"
    "591028970641401109712062804390397595156771577004203378699360072305587631"
    "763594218731251471205329281918261861258673215791984148488291644706095752"
    "706957220917567116722910981690915280173506712748583222871835209353965725"
    "121083579151369882091444210067510334671103141267111369908658516398315019"
    "701651511685171437657618351556508849099898599823873455283316355076479185"
    "358932261854896321329330898570642046752590709154814165498594616371802709"
    "819943099244889575712828905923233260972997120844335732654893823911932597"
    "463667305836041428138830320382490375898524374417029132765618093773444030"
    "707469211201913020330380197621101100449293215160842444859637669838952286"
    "847831235526582131449576857262433441893039686426243410773226978028073189"
    "154411010446823252716201052652272111660396665573092547110557853763466820"
    "653109896526918620564769312570586356620185581007293606598764861179"
)

E_DIGITS = (
    "2.7182818284590452353602874713526624977572470936999595749669676277240766"
    "303535475945713821785251664274274663919320030599218174135966290435729003"
    "342952605956307381323286279434907632338298807531952510190115738341879307"
    "021540891499348841675092447614606680822648001684774118537423454424371075"
    "390777449920695517027618386062613313845830007520449338265602976067371132"
    "007093287091274437470472306969772093101416928368190255151086574637721112"
    "523897844250569536967707854499699679468644549059879316368892300987931277"
    "361782154249992295763514822082698951936680331825288693984964651058209392"
    "398294887933203625094431173012381970684161403970198376793206832823764648"
    "042953118023287825098194558153017567173613320698112509961818815930416903"
    "515988885193458072738667385894228792284998920868058257492796104841984443"
    "634632449684875602336248270419786232090021609902353043699418491463140934"
    "317381436405462531520961836908887070167683964243781405927145635490613031"
    "072085103837505101157477041718986106873969655212671546889570350354021234"
    "078498193343210681701210056278802351930332247450158539047304199577770935"
    "036604169973297250886876966403555707162268447162560798826517871341951246"
    "652010305921236677194325278675398558944896970964097545918569563802363701"
    "621120477427228364896134225164450781824423529486363721417402388934412479"
    "635743702637552944483379980161254922785092577825620926226483262779333865"
    "664816277251640191059004916449982893150566047258027786318641551956532442"
    "586982946959308019152987211725563475463964479101459040905862984967912874"
    "068705048958586717479854667757573205681288459205413340539220001137863009"
    "455606881667400169842055804033637953764520304024322566135278369511778838"
    "638744396625322498506549958862342818997077332761717839280349465014345588"
    "970719425863987727547109629537415211151368350627526023264847287039207643"
    "100595841166120545297030236472549296669381151373227536450988890313602057"
    "248176585118063036442812314965507047510254465011727211555194866850800368"
    "532281831521960037356252794495158284188294787610852639813955990067376482"
    "922443752871846245780361929819713991475644882626039033814418232625150974"
    "827987779964373089970388867782271383605772978824125611907176639465070633"
    "045279546618550966661856647097113444740160704626215680717481877844371436"
    "988218559670959102596862002353718588748569652200050311734392073211390803"
    "293634479727355955277349071783793421637012050054513263835440001863239914"
    "907054797780566978533580489669062951194324730995876552368128590413832411"
    "607226029983305353708761389396391779574540161372236187893652605381558415"
    "871869255386061647798340254351284396129460352913325942794904337299085731"
    "580290958631382683291477116396337092400316894586360606458459251269946557"
    "248391865642097526850823075442545993769170419777800853627309417101634349"
    "076964237222943523661255725088147792231519747780605696725380171807763603"
    "462459278778465850656050780844211529697521890874019660906651803516501792"
    "504619501366585436632712549639908549144200014574760819302212066024330096"
    "412704894390397177195180699086998606636583232278709376502260149291011517"
    "177635944602023249300280401867723910288097866605651183260043688508817157"
    "238669842242201024950551881694803221002515426494639812873677658927688163"
    "598312477886520141174110913601164995076629077943646005851941998560162647"
    "907615321038727557126992518275687989302761761146162549356495903798045838"
    "182323368612016243736569846703785853305275833337939907521660692380533698"
    "879565137285593883499894707416181550125397064648171946708348197214488898"
    "790676503795903669672494992545279033729636162658976039498576741397359441"
    "023744329709355477982629614591442936451428617158587339746791897571211956"
    "187385783644758448423555581050025611492391518893099463428413936080383091"
    "662818811503715284967059741625628236092168075150177725387402564253470879"
    "089137291722828611515915683725241630772254406337875931059826760944203261"
    "924285317018781772960235413060672136046000389661093647095141417185777014"
    "180606443636815464440053316087783143174440811949422975599314011888683314"
    "832802706553833004693290115744147563139997221703804617092894579096271662"
    "260740718749975359212756084414737823303270330168237193648002173285"
)
